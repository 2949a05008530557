"""Line-oriented text netlists, in the style of RevLib ``.real`` files.

::

    .version 1
    .numvars 5
    .variables A B Cin c0 c1
    .outputs - S - Cout -
    .constants ---00
    .garbage g-g-g
    ig A B c0 c1
    ig Cin B c0 c1
    .end

``.inputs`` / ``.outputs`` are optional and only written when a named
input or output differs from its line's variable name; ``-`` marks a
position without a name (constant or garbage line).
"""
from __future__ import annotations

from .circuit import (GARBAGE, Circuit, CircuitError, Constant, NamedInput,
                      NamedOutput, assemble)
from .gates import GateKind

VERSION = "1"


class NetlistError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


_HEADER = (".version", ".numvars", ".variables", ".inputs", ".outputs",
           ".constants", ".garbage")


def parse_netlist(text: str) -> Circuit:
    header: dict[str, tuple[int, list[str]]] = {}
    gates: list[tuple[int, str, list[str]]] = []
    ended = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ended:
            raise NetlistError("content after .end", lineno)
        head, *rest = line.split()
        if head == ".end":
            ended = True
        elif head.startswith("."):
            if head not in _HEADER:
                raise NetlistError(f"unknown directive {head}", lineno)
            if head in header:
                raise NetlistError(f"repeated directive {head}", lineno)
            if gates:
                raise NetlistError(f"{head} after gate lines", lineno)
            header[head] = (lineno, rest)
        else:
            gates.append((lineno, head, rest))
    if not ended:
        raise NetlistError("missing .end")
    for key in (".version", ".numvars", ".variables", ".constants", ".garbage"):
        if key not in header:
            raise NetlistError(f"missing {key}")

    lineno, ver = header[".version"]
    if ver != [VERSION]:
        raise NetlistError(f"unsupported version {' '.join(ver)}", lineno)
    lineno, nv = header[".numvars"]
    if len(nv) != 1 or not nv[0].isdigit() or int(nv[0]) < 1:
        raise NetlistError(".numvars needs one positive integer", lineno)
    width = int(nv[0])

    def fields(key, single=False):
        lineno, vals = header[key]
        if single:
            if len(vals) != 1 or len(vals[0]) != width:
                raise NetlistError(f"{key} needs one mask of {width} characters", lineno)
            return lineno, vals[0]
        if len(vals) != width:
            raise NetlistError(f"{key} lists {len(vals)} names, expected {width}", lineno)
        return lineno, vals

    _, names = fields(".variables")
    if len(set(names)) != width:
        raise NetlistError("duplicate variable names", header[".variables"][0])
    lineno, cmask = fields(".constants", single=True)
    if set(cmask) - set("-01"):
        raise NetlistError(".constants mask may only hold '-', '0', '1'", lineno)
    lineno, gmask = fields(".garbage", single=True)
    if set(gmask) - set("-g"):
        raise NetlistError(".garbage mask may only hold '-', 'g'", lineno)
    in_labels = fields(".inputs")[1] if ".inputs" in header else names
    out_labels = fields(".outputs")[1] if ".outputs" in header else names

    inputs = [NamedInput(in_labels[i]) if m == "-" else Constant(int(m))
              for i, m in enumerate(cmask)]
    outputs = [NamedOutput(out_labels[i]) if m == "-" else GARBAGE
               for i, m in enumerate(gmask)]
    for i, r in enumerate(inputs):
        if isinstance(r, NamedInput) and r.name == "-":
            raise NetlistError(f"named input on line {names[i]} has no name", header[".inputs"][0])
    for i, r in enumerate(outputs):
        if isinstance(r, NamedOutput) and r.name == "-":
            raise NetlistError(f"named output on line {names[i]} has no name", header[".outputs"][0])

    index = {n: i for i, n in enumerate(names)}
    apps = []
    for lineno, mnemonic, args in gates:
        try:
            kind = GateKind.parse(mnemonic)
        except ValueError as e:
            raise NetlistError(str(e), lineno) from None
        unknown = [a for a in args if a not in index]
        if unknown:
            raise NetlistError(f"unknown variables {unknown}", lineno)
        apps.append((kind, [index[a] for a in args]))

    try:
        return assemble(width, inputs, apps, outputs, names)
    except CircuitError as e:
        first = e.errors[0]
        lineno = gates[first.gate][0] if first.gate is not None else None
        raise NetlistError(str(e), lineno) from e


def serialize(circuit: Circuit) -> str:
    names = list(circuit.names)
    out = [f".version {VERSION}", f".numvars {circuit.width}",
           ".variables " + " ".join(names)]
    in_labels = [r.name if isinstance(r, NamedInput) else "-" for r in circuit.inputs]
    out_labels = [r.name if isinstance(r, NamedOutput) else "-" for r in circuit.outputs]
    if any(lab not in ("-", n) for lab, n in zip(in_labels, names)):
        out.append(".inputs " + " ".join(in_labels))
    if any(lab not in ("-", n) for lab, n in zip(out_labels, names)):
        out.append(".outputs " + " ".join(out_labels))
    out.append(".constants " + "".join(
        str(r.value) if isinstance(r, Constant) else "-" for r in circuit.inputs))
    out.append(".garbage " + "".join(
        "-" if isinstance(r, NamedOutput) else "g" for r in circuit.outputs))
    for g in circuit.gates:
        out.append(" ".join([g.kind.value] + [names[i] for i in g.lines]))
    out.append(".end")
    return "\n".join(out) + "\n"
