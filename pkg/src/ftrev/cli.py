"""Command-line front end.

Exit codes: 0 success, 1 a check failed (counterexample printed), 2 usage,
parse or cap errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import faults, metrics, sim, synth
from .circuit import CircuitError, validate
from .gates import GateKind, check_gate
from .netlist import NetlistError, parse_netlist, serialize


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str):
    return parse_netlist(_read(path))


def _emit(text: str, path: str | None = None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _bits(s: str) -> str:
    return "".join(str(b) for b in s)


def cmd_generate(args) -> int:
    what = args.what
    if what == "ftfa":
        c = synth.build_ftfa()
    elif what == "ripple":
        c = synth.build_ripple(args.n)
    elif what == "bcd":
        c = synth.build_bcd_digit()
    elif what == "bcd-chain":
        c = synth.build_bcd_chain(args.d)
    else:
        if not args.fn:
            raise UsageError("generate bool needs --fn")
        c = synth.realize_boolean(args.fn)
    _emit(serialize(c), args.output)
    return 0


def cmd_simulate(args) -> int:
    c = _load(args.file)
    names = c.input_names
    bits = args.inputs
    if len(bits) != len(names) or set(bits) - set("01"):
        raise UsageError(f"--inputs needs {len(names)} bits for {' '.join(names)}")
    res = sim.simulate(c, {n: int(b) for n, b in zip(names, bits)})
    if args.json:
        _emit(json.dumps({"named_outputs": res.named_outputs,
                          "garbage": list(res.garbage)}) + "\n")
    else:
        _emit(" ".join(f"{k}={v}" for k, v in res.named_outputs.items()) + "\n")
    return 0


def cmd_verify(args) -> int:
    c = _load(args.file)
    checks = [x.strip() for x in args.checks.split(",") if x.strip()]
    unknown = set(checks) - {"structure", "bijective", "parity"}
    if unknown:
        raise UsageError(f"unknown checks {sorted(unknown)}")
    cap = sim.max_width()
    failed = False
    for check in checks:
        if check == "structure":
            errors = validate(c)
            failed |= bool(errors)
            print("structure: " + ("FAIL " + "; ".join(map(str, errors)) if errors else "PASS"))
        elif check == "bijective":
            if c.width <= cap:
                ok = sim.check_bijective(c)
                failed |= not ok
                print("bijective: " + ("PASS" if ok else "FAIL"))
            else:
                ok = all(check_gate(k).reversible for k in c.kinds())
                failed |= not ok
                print(f"bijective: {'PASS' if ok else 'FAIL'} (width {c.width} over cap {cap}; "
                      "checked per gate, composition of bijections)")
        elif check == "parity":
            wide = c.width > cap
            res = sim.check_parity(c, constants_fixed=wide)
            note = " (named inputs swept, constants fixed)" if wide else ""
            if res.preserving:
                print(f"parity: PASS{note}")
            else:
                failed = True
                print(f"parity: FAIL{note} counterexample {_bits(res.counterexample)}")
    return 1 if failed else 0


def cmd_table(args) -> int:
    _emit(sim.format_table(_load(args.file)))
    return 0


def cmd_faults(args) -> int:
    c = _load(args.file)
    rep = faults.coverage(c)
    if args.json:
        d = rep.to_dict()
        d["undetected"] = d["undetected"][:args.limit]
        _emit(json.dumps(d) + "\n")
    else:
        lines = [f"sites       {len(faults.sites(c))}",
                 f"pairs       {rep.total_pairs}",
                 f"detected    {rep.detected}",
                 f"coverage    {rep.coverage:.6f}",
                 f"observable  {rep.observable_coverage:.6f}"]
        for site, vec in rep.undetected[:args.limit]:
            lines.append(f"undetected  step={site.step} line={c.names[site.line]} "
                         f"inputs={_bits(vec)}")
        _emit("\n".join(lines) + "\n")
    return 0 if rep.detected == rep.total_pairs else 1


def cmd_metrics(args) -> int:
    c = _load(args.file)
    table = metrics.load_cost_table(_read(args.cost_table)) if args.cost_table else None
    rep = metrics.compute(c, table)
    if args.json:
        _emit(json.dumps(rep.to_dict()) + "\n")
    else:
        _emit(rep.to_text() + f"units       {metrics.reversible_units(c)}\n")
    return 0


def cmd_search(args) -> int:
    try:
        target = metrics.FunctionTable.from_bits(*args.target.split(","))
        kinds = [GateKind.parse(g) for g in args.gates.split(",")]
    except ValueError as e:
        raise UsageError(str(e)) from None
    found = synth.search_realization(target, kinds, args.max_gates,
                                     allow_input_duplication=args.allow_duplication)
    if found is None:
        print("no realization found", file=sys.stderr)
        return 1
    _emit(serialize(found))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ftrev", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit a generated circuit as a netlist")
    g.add_argument("what", choices=["ftfa", "ripple", "bcd", "bcd-chain", "bool"])
    g.add_argument("--n", type=int, default=4, help="ripple width in bits")
    g.add_argument("--d", type=int, default=2, help="BCD chain length in digits")
    g.add_argument("--fn", choices=sorted(synth.BOOLEAN_TARGETS), type=str.upper)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("simulate", help="evaluate one named-input vector")
    s.add_argument("file")
    s.add_argument("--inputs", required=True,
                   help="bits for the named inputs, in .variables order")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_simulate)

    v = sub.add_parser("verify", help="structural, bijectivity and parity checks")
    v.add_argument("file")
    v.add_argument("--checks", default="structure,bijective,parity")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print the named-input truth table")
    t.add_argument("file")
    t.set_defaults(func=cmd_table)

    f = sub.add_parser("faults", help="single bit-flip fault coverage")
    f.add_argument("file")
    f.add_argument("--json", action="store_true")
    f.add_argument("--limit", type=int, default=10, help="undetected pairs to print")
    f.set_defaults(func=cmd_faults)

    m = sub.add_parser("metrics", help="gate count, garbage, constants, depth, cost")
    m.add_argument("file")
    m.add_argument("--json", action="store_true")
    m.add_argument("--cost-table", help='JSON such as {"ig": [4, 3, 1]}')
    m.set_defaults(func=cmd_metrics)

    r = sub.add_parser("search", help="brute-force a small realization")
    r.add_argument("--target", required=True,
                   help="output column bits, comma separated per output, e.g. 0111")
    r.add_argument("--gates", default="ig")
    r.add_argument("--max-gates", type=int, default=1)
    r.add_argument("--allow-duplication", action="store_true")
    r.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, NetlistError, CircuitError, sim.CapExceeded, OSError,
            ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


cli_run = main

if __name__ == "__main__":
    sys.exit(main())
