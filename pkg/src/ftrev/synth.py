"""Circuit generators built from parity-preserving gates.

The full adder is two IGs on lines (A, B, 0, 0): the first IG leaves
``A^B`` on the B line and ``AB`` / ``A~B`` on the constant lines, the second
IG, controlled by the third addend, turns those into the sum and carry.
Because the full adder is symmetric in its three addends, any addend may
drive the first IG.
"""
from __future__ import annotations

import itertools
import re
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from .circuit import (GARBAGE, Circuit, Constant, NamedInput, NamedOutput,
                      assemble)
from .gates import GateKind, spec
from .metrics import FunctionTable
from .sim import all_states, bits_int, run_batch

IG, FRG, F2G, PPHCG = GateKind.IG, GateKind.FRG, GateKind.F2G, GateKind.PPHCG


class _Builder:
    def __init__(self):
        self.names: list[str] = []
        self.roles: list = []
        self.gates: list = []
        self.outs: dict[int, str] = {}
        self._k = 0

    def input(self, name: str) -> int:
        self.names.append(name)
        self.roles.append(NamedInput(name))
        return len(self.roles) - 1

    def const(self, value: int = 0) -> int:
        self.names.append(f"c{self._k}")
        self._k += 1
        self.roles.append(Constant(value))
        return len(self.roles) - 1

    def gate(self, kind: GateKind, *lines: int) -> int:
        self.gates.append((kind, lines))
        return len(self.gates) - 1

    def output(self, line: int, name: str):
        self.outs[line] = name

    def build(self) -> Circuit:
        w = len(self.roles)
        outputs = [NamedOutput(self.outs[i]) if i in self.outs else GARBAGE for i in range(w)]
        return assemble(w, self.roles, self.gates, outputs, self.names)

    def ftfa(self, first: int, second: int, third: int) -> tuple[int, int]:
        """Append a two-IG full adder; returns (sum line, carry line)."""
        k0, k1 = self.const(0), self.const(0)
        self.gate(IG, first, second, k0, k1)
        self.gate(IG, third, second, k0, k1)
        return second, k0


def build_ftfa() -> Circuit:
    b = _Builder()
    a, bb, cin = b.input("A"), b.input("B"), b.input("Cin")
    s, cout = b.ftfa(a, bb, cin)
    b.output(s, "S")
    b.output(cout, "Cout")
    return b.build()


def build_ripple(n: int) -> Circuit:
    """N-bit ripple carry adder from full adder blocks.

    Inputs are ``a{N-1}..a0, b{N-1}..b0, cin`` (most significant first) and
    outputs ``s0..s{N-1}, cout``.  The incoming carry drives the first IG of
    each block, so every block waits on its predecessor: depth is 2N.
    """
    if not 1 <= n <= 16:
        raise ValueError(f"ripple width must be in 1..16, got {n}")
    b = _Builder()
    a = {i: b.input(f"a{i}") for i in reversed(range(n))}
    bb = {i: b.input(f"b{i}") for i in reversed(range(n))}
    carry = b.input("cin")
    for i in range(n):
        s, carry = b.ftfa(carry, bb[i], a[i])
        b.output(s, f"s{i}")
    b.output(carry, "cout")
    return b.build()


# BCD -----------------------------------------------------------------------

class BcdTaps(NamedTuple):
    """Where the carry-skip multiplexer of one digit block sits."""

    mux_step: int       # index of the skip FRG in circuit.gates
    propagate: int      # line holding AND of (A_i ^ B_i) before the mux
    carry: int          # line holding C4 before the mux, the block carry after
    cin: int            # block carry-in line
    decimal_carry: int  # line holding the digit carry-out


def _bcd_block(b: _Builder, a: list[int], bb: list[int], cin: int) -> tuple[list[int], BcdTaps]:
    """Append one carry-skip BCD digit; ``a``/``bb`` are bit lines, LSB first.

    Returns the sum digit lines (LSB first) and the block taps.
    """
    # binary stage: all first-level IGs up front so A_i ^ B_i sits on the B lines
    consts = []
    for i in range(4):
        k0, k1 = b.const(0), b.const(0)
        b.gate(IG, a[i], bb[i], k0, k1)
        consts.append((k0, k1))

    # block propagate: copy p0, then AND in p1..p3 (FRG with a 0 on port C is AND)
    one, acc = b.const(1), b.const(0)
    b.gate(FRG, bb[0], one, acc)
    for i in range(1, 4):
        nxt = b.const(0)
        b.gate(FRG, bb[i], acc, nxt)
        acc = nxt
    propagate = acc

    carry = cin
    for i in range(4):
        k0, k1 = consts[i]
        b.gate(IG, carry, bb[i], k0, k1)
        carry = k0
    z = bb

    # skip: block carry = P ? Cin : C4
    mux = b.gate(FRG, propagate, carry, cin)
    block_carry = carry

    # correction flag K = carry ^ Z3Z2 ^ Z3~Z2Z1 (terms pairwise disjoint, so XOR == OR)
    t1, t1n = b.const(0), b.const(0)
    b.gate(IG, z[3], z[2], t1, t1n)
    t2 = b.const(0)
    b.gate(FRG, z[1], t1n, t2)
    spare = b.const(0)
    b.gate(F2G, z[3], z[2], spare)  # restores Z2
    pad = b.const(0)
    b.gate(PPHCG, block_carry, t1, t2, pad)
    k = t2

    # add 0110 * K; K rides through on pass-through ports and ends as the digit carry
    h0, h1 = b.const(0), b.const(0)
    b.gate(IG, k, z[1], h0, h1)
    _, c3 = b.ftfa(k, z[2], h0)
    tail = b.const(0)
    b.gate(F2G, c3, z[3], tail)
    return z, BcdTaps(mux, propagate, block_carry, cin, k)


def bcd_digit_layout() -> tuple[Circuit, BcdTaps]:
    b = _Builder()
    a = [b.input(f"A{i}") for i in (3, 2, 1, 0)][::-1]
    bb = [b.input(f"B{i}") for i in (3, 2, 1, 0)][::-1]
    cin = b.input("Cin")
    z, taps = _bcd_block(b, a, bb, cin)
    for i in (3, 2, 1, 0):
        b.output(z[i], f"S{i}")
    b.output(taps.decimal_carry, "Cout")
    return b.build(), taps


def build_bcd_digit() -> Circuit:
    """One-digit carry-skip BCD adder: inputs A3..A0, B3..B0, Cin; outputs S3..S0, Cout."""
    return bcd_digit_layout()[0]


def bcd_chain_layout(d: int) -> tuple[Circuit, list[BcdTaps]]:
    if not 1 <= d <= 4:
        raise ValueError(f"BCD chain length must be in 1..4, got {d}")
    b = _Builder()
    digits = list(reversed(range(d)))
    a = {k: [b.input(f"A{k}_{i}") for i in (3, 2, 1, 0)][::-1] for k in digits}
    bb = {k: [b.input(f"B{k}_{i}") for i in (3, 2, 1, 0)][::-1] for k in digits}
    carry = b.input("Cin")
    taps = []
    for k in range(d):
        z, t = _bcd_block(b, a[k], bb[k], carry)
        for i in (3, 2, 1, 0):
            b.output(z[i], f"S{k}_{i}")
        carry = t.decimal_carry
        taps.append(t)
    b.output(carry, "Cout")
    return b.build(), taps


def build_bcd_chain(d: int) -> Circuit:
    """``d`` digit blocks; each digit's carry-out line is the next digit's carry-in."""
    return bcd_chain_layout(d)[0]


def _bcd_name(side: str, k: int, i: int, digits: int | None) -> str:
    return f"{side}{i}" if digits is None else f"{side}{k}_{i}"


def bcd_inputs(a, b, cin, digits: int | None = None) -> dict:
    """Named-input bits for decimal operands ``a``, ``b`` (ints or int arrays).

    ``digits=None`` targets :func:`build_bcd_digit`, otherwise a chain.
    """
    a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
    out = {"Cin": np.asarray(cin, dtype=np.uint8)}
    for k in range(digits or 1):
        da = (a // 10 ** k) % 10
        db = (b // 10 ** k) % 10
        for i in range(4):
            out[_bcd_name("A", k, i, digits)] = ((da >> i) & 1).astype(np.uint8)
            out[_bcd_name("B", k, i, digits)] = ((db >> i) & 1).astype(np.uint8)
    return out


def bcd_decode(named_outputs: Mapping, digits: int | None = None):
    """(decimal value, carry) from named outputs; arrays decode element-wise."""
    value = 0
    for k in range(digits or 1):
        digit = sum(np.asarray(named_outputs[_bcd_name("S", k, i, digits)], dtype=np.int64) << i
                    for i in range(4))
        value = value + digit * 10 ** k
    return value, np.asarray(named_outputs["Cout"], dtype=np.int64)


# Boolean realizations --------------------------------------------------------

_DUP = re.compile(r"^(.+)_dup\d*$")


def duplicated_inputs(circuit: Circuit) -> dict[str, str]:
    """Map each duplicate input line name to the external signal it copies."""
    names = set(circuit.input_names)
    out = {}
    for n in names:
        m = _DUP.match(n)
        if m and m.group(1) in names:
            out[n] = m.group(1)
    return out


def expand_inputs(circuit: Circuit, values: Mapping[str, int]) -> dict:
    """Fill duplicate input lines from their source signal."""
    full = dict(values)
    for dup, src in duplicated_inputs(circuit).items():
        full[dup] = values[src]
    return full


def _one_ig(binding: list, port: int) -> Circuit:
    b = _Builder()
    lines = [b.input(x) if isinstance(x, str) else b.const(x) for x in binding]
    b.gate(IG, *lines)
    b.output(lines[port], "f")
    return b.build()


BOOLEAN_TARGETS = {
    "NOT": FunctionTable.from_bits("10"),
    "XOR": FunctionTable.from_bits("0110"),
    "AND": FunctionTable.from_bits("0001"),
    "OR": FunctionTable.from_bits("0111"),
    "XNOR": FunctionTable.from_bits("1001"),
}


def realize_boolean(fn: str) -> Circuit:
    """IG-only circuit whose output ``f`` computes ``fn`` of inputs a (, b)."""
    fn = fn.upper()
    if fn == "NOT":
        return _one_ig([1, "a", 0, 0], 1)
    if fn == "XOR":
        return _one_ig(["a", "b", 0, 0], 1)
    if fn == "AND":
        return _one_ig(["a", "b", 0, 0], 2)
    if fn == "OR":
        return _one_ig(["a", "b", 0, "b_dup"], 3)
    if fn in BOOLEAN_TARGETS:
        found = search_realization(BOOLEAN_TARGETS[fn], [IG], max_gates=2,
                                   allow_input_duplication=True)
        assert found is not None
        return found
    raise ValueError(f"unknown Boolean function {fn!r}")


def _structures(kinds: list[GateKind], n_gates: int, width: int):
    """Gate sequences on ``width`` lines; the first gate is pinned to lines 0..k-1.

    Pinning loses nothing because every line binding is tried afterwards.
    """
    for seq in itertools.product(kinds, repeat=n_gates):
        if any(spec(k).arity > width for k in seq):
            continue
        if not seq:
            yield ()
            continue
        first = (seq[0], tuple(range(spec(seq[0]).arity)))
        rest = [itertools.permutations(range(width), spec(k).arity) for k in seq[1:]]
        for lines in itertools.product(*rest):
            yield (first,) + tuple(zip(seq[1:], lines))


def _bindings(n_in: int, width: int, allow_dup: bool) -> np.ndarray:
    """Line bindings: symbol i < n_in is input i, then constants 0, 1."""
    symbols = range(n_in + 2)
    rows = []
    for combo in itertools.product(symbols, repeat=width):
        used = [combo.count(i) for i in range(n_in)]
        if min(used, default=1) == 0:
            continue
        if not allow_dup and max(used, default=0) > 1:
            continue
        rows.append(combo)
    # fewest duplicated inputs first; stable sort keeps lexicographic order within
    rows.sort(key=lambda combo: sum(s < n_in for s in combo))
    return np.array(rows, dtype=np.int64).reshape(len(rows), width)


def search_realization(target: FunctionTable, gate_set: Iterable[GateKind],
                       max_gates: int, allow_input_duplication: bool = False,
                       max_lines: int | None = None,
                       input_names: list[str] | None = None,
                       output_names: list[str] | None = None) -> Circuit | None:
    """Brute-force the smallest circuit realizing ``target``.

    Order: fewer gates, then fewer lines, then structure, then line binding
    (fewest duplicated inputs, then lexicographic).  Every target input is
    bound to at least one line.
    """
    if target.n_in > 3 or target.n_out > 2:
        raise ValueError("search handles at most 3 inputs and 2 outputs")
    if max_gates > 2:
        raise ValueError("search handles at most 2 gates")
    kinds = sorted({GateKind(k) for k in gate_set}, key=list(GateKind).index)
    n_in, n_out = target.n_in, target.n_out
    input_names = input_names or list("abc"[:n_in])
    output_names = output_names or list("fg"[:n_out])
    if max_lines is None:
        max_lines = max([spec(k).arity for k in kinds] + [n_in]) + 1

    rows = np.arange(2 ** n_in)
    row_bits = ((rows[None, :] >> np.arange(n_in - 1, -1, -1)[:, None]) & 1)
    # symbol value per row: inputs, then constant 0, constant 1
    sym_vals = np.vstack([row_bits, np.zeros((1, rows.size), np.int64),
                          np.ones((1, rows.size), np.int64)])
    targets = [np.array(target.column(k)) for k in range(n_out)]

    for n_gates in range(max_gates + 1):
        for width in range(max(1, n_in, n_out), max_lines + 1):
            binds = _bindings(n_in, width, allow_input_duplication)
            if binds.size == 0:
                continue
            # state integer for every (binding, row)
            vals = sym_vals[binds]  # (nb, width, R)
            weights = 1 << np.arange(width - 1, -1, -1)
            states = np.einsum("bwr,w->br", vals, weights)
            for struct in _structures(kinds, n_gates, width):
                hit = _match(struct, width, states, targets)
                if hit is not None:
                    bi, lines = hit
                    return _realized(struct, width, binds[bi], lines, n_in,
                                     input_names, output_names)
    return None


def _match(struct, width, states, targets):
    probe = assemble(width, [Constant(0)] * width, list(struct), [GARBAGE] * width)
    perm = bits_int(run_batch(probe, all_states(width)))
    out = perm[states]  # (nb, R)
    shifts = np.arange(width - 1, -1, -1)
    line_vals = (out[:, :, None] >> shifts) & 1  # (nb, R, width)
    ok = [(line_vals == t[None, :, None]).all(axis=1) for t in targets]  # (nb, width)
    candidates = np.flatnonzero(np.all([m.any(axis=1) for m in ok], axis=0))
    for bi in candidates:
        choice = _distinct_lines([np.flatnonzero(m[bi]) for m in ok])
        if choice is not None:
            return int(bi), choice
    return None


def _distinct_lines(options):
    for combo in itertools.product(*options):
        if len(set(combo)) == len(combo):
            return [int(x) for x in combo]
    return None


def _realized(struct, width, binding, out_lines, n_in, input_names, output_names):
    b = _Builder()
    seen: dict[int, int] = {}
    for sym in binding:
        sym = int(sym)
        if sym < n_in:
            base = input_names[sym]
            count = seen.get(sym, 0)
            seen[sym] = count + 1
            name = base if count == 0 else (f"{base}_dup" if count == 1 else f"{base}_dup{count}")
            b.input(name)
        else:
            b.const(sym - n_in)
    for kind, lines in struct:
        b.gate(kind, *lines)
    for line, name in zip(out_lines, output_names):
        b.output(line, name)
    return b.build()
