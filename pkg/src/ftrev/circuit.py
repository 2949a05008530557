"""Line-based reversible netlists.

A circuit is a fixed set of ``width`` lines rewritten in place by an ordered
list of gate applications.  Because every gate reads and writes the same
distinct lines, fan-out and feedback cannot be expressed at all; validation
only has to check indices, arities and role lists.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Sequence, Union

from .gates import GateKind, spec


class CircuitError(ValueError):
    """Raised by :func:`assemble` when a circuit fails validation."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(str(e) for e in self.errors))


@dataclass(frozen=True)
class NamedInput:
    name: str


@dataclass(frozen=True)
class Constant:
    value: int


@dataclass(frozen=True)
class NamedOutput:
    name: str


@dataclass(frozen=True)
class Garbage:
    pass


GARBAGE = Garbage()

LineRole = Union[NamedInput, Constant]
OutputRole = Union[NamedOutput, Garbage]


@dataclass(frozen=True)
class GateApp:
    kind: GateKind
    lines: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", GateKind(self.kind))
        object.__setattr__(self, "lines", tuple(operator.index(i) for i in self.lines))


@dataclass(frozen=True)
class StructuralError:
    code: str  # arity | duplicate | range | roles | name | constant
    message: str
    gate: int | None = None

    def __str__(self):
        where = f"gate {self.gate}: " if self.gate is not None else ""
        return f"{where}{self.message}"


@dataclass(frozen=True)
class Circuit:
    width: int
    inputs: tuple[LineRole, ...]
    gates: tuple[GateApp, ...]
    outputs: tuple[OutputRole, ...]
    names: tuple[str, ...] = field(default=())

    @property
    def input_names(self) -> list[str]:
        return [r.name for r in self.inputs if isinstance(r, NamedInput)]

    @property
    def output_names(self) -> list[str]:
        return [r.name for r in self.outputs if isinstance(r, NamedOutput)]

    @property
    def n_constants(self) -> int:
        return sum(isinstance(r, Constant) for r in self.inputs)

    @property
    def n_garbage(self) -> int:
        return sum(isinstance(r, Garbage) for r in self.outputs)

    def line_of_input(self, name: str) -> int:
        for i, r in enumerate(self.inputs):
            if isinstance(r, NamedInput) and r.name == name:
                return i
        raise KeyError(name)

    def line_of_output(self, name: str) -> int:
        for i, r in enumerate(self.outputs):
            if isinstance(r, NamedOutput) and r.name == name:
                return i
        raise KeyError(name)

    def kinds(self) -> set[GateKind]:
        return {g.kind for g in self.gates}

    def mirror(self) -> "Circuit":
        """Gates in reverse order; pair with inverse gate evaluation to undo."""
        return Circuit(self.width, self.inputs, self.gates[::-1], self.outputs, self.names)


def default_names(inputs: Sequence[LineRole]) -> tuple[str, ...]:
    names = []
    taken = {r.name for r in inputs if isinstance(r, NamedInput)}
    k = 0
    for r in inputs:
        if isinstance(r, NamedInput):
            names.append(r.name)
            continue
        while f"k{k}" in taken:
            k += 1
        names.append(f"k{k}")
        taken.add(f"k{k}")
    return tuple(names)


def validate(circuit: Circuit) -> list[StructuralError]:
    """Return structural errors; an empty list means the circuit is valid."""
    errors = []
    w = circuit.width
    if not isinstance(w, int) or w < 1:
        return [StructuralError("roles", f"width must be a positive integer, got {w!r}")]
    if len(circuit.inputs) != w:
        errors.append(StructuralError(
            "roles", f"{len(circuit.inputs)} input roles for width {w}"))
    if len(circuit.outputs) != w:
        errors.append(StructuralError(
            "roles", f"{len(circuit.outputs)} output roles for width {w}"))
    if circuit.names and len(circuit.names) != w:
        errors.append(StructuralError("roles", f"{len(circuit.names)} line names for width {w}"))

    for what, names in (("line", list(circuit.names)),
                        ("input", circuit.input_names),
                        ("output", circuit.output_names)):
        dup = sorted({n for n in names if names.count(n) > 1})
        if dup:
            errors.append(StructuralError("name", f"duplicate {what} names {dup}"))
    for r in circuit.inputs:
        if isinstance(r, Constant) and r.value not in (0, 1):
            errors.append(StructuralError("constant", f"constant value {r.value!r} is not a bit"))

    for j, g in enumerate(circuit.gates):
        arity = spec(g.kind).arity
        if len(g.lines) != arity:
            errors.append(StructuralError(
                "arity", f"{g.kind.name} needs {arity} lines, got {len(g.lines)}", j))
        if len(set(g.lines)) != len(g.lines):
            errors.append(StructuralError("duplicate", f"repeated line in {list(g.lines)}", j))
        bad = [i for i in g.lines if not (isinstance(i, int) and 0 <= i < w)]
        if bad:
            errors.append(StructuralError("range", f"line index {bad} outside [0, {w})", j))
    return errors


def assemble(width: int, inputs: Sequence[LineRole], gates: Sequence,
             outputs: Sequence[OutputRole], names: Sequence[str] | None = None) -> Circuit:
    """Build a validated circuit.  ``gates`` items may be GateApp or (kind, lines)."""
    apps = tuple(g if isinstance(g, GateApp) else GateApp(g[0], tuple(g[1])) for g in gates)
    inputs = tuple(inputs)
    circuit = Circuit(width, inputs, apps, tuple(outputs),
                      tuple(names) if names else default_names(inputs))
    errors = validate(circuit)
    if errors:
        raise CircuitError(errors)
    return circuit


def empty(width: int = 1) -> Circuit:
    """Identity circuit whose lines are named inputs/outputs x0, x1, ..."""
    names = [f"x{i}" for i in range(width)]
    return assemble(width, [NamedInput(n) for n in names], [],
                    [NamedOutput(n) for n in names])


def single_gate(kind: GateKind) -> Circuit:
    """One gate on fresh lines, every port a named input and output."""
    n = spec(kind).arity
    names = [chr(ord("a") + i) for i in range(n)]
    return assemble(n, [NamedInput(x) for x in names], [(kind, range(n))],
                    [NamedOutput(x) for x in "pqrs"[:n]])
