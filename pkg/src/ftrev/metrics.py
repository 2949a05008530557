"""Cost and size measures for reversible circuits, plus garbage lower bounds."""
from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Mapping

from .circuit import Circuit
from .gates import DEFAULT_COSTS, CostTriple, GateKind


class UnknownCost(KeyError):
    pass


@dataclass(frozen=True)
class MetricsReport:
    gate_count: int
    per_kind: dict
    garbage: int
    constants: int
    depth: int
    total: CostTriple

    def to_dict(self) -> dict:
        return {
            "gate_count": self.gate_count,
            "per_kind": {k.value: n for k, n in self.per_kind.items()},
            "garbage": self.garbage,
            "constants": self.constants,
            "depth": self.depth,
            "total": {"alpha": self.total.alpha, "beta": self.total.beta,
                      "delta": self.total.delta},
        }

    def to_text(self) -> str:
        kinds = ", ".join(f"{n} {k.name}" for k, n in self.per_kind.items()) or "none"
        return (f"gate_count  {self.gate_count} ({kinds})\n"
                f"depth       {self.depth}\n"
                f"garbage     {self.garbage}\n"
                f"constants   {self.constants}\n"
                f"T           {self.total}\n")


def summarize_multiset(counts: Mapping[GateKind, int],
                       cost_table: Mapping[GateKind, CostTriple] | None = None) -> CostTriple:
    table = DEFAULT_COSTS if cost_table is None else cost_table
    total = CostTriple()
    for kind, n in counts.items():
        kind = GateKind(kind)
        if kind not in table:
            raise UnknownCost(f"no cost entry for {kind.name}")
        total = total + table[kind] * n
    return total


def depth(circuit: Circuit) -> int:
    """Longest chain of gates linked by a shared line (ASAP levelling)."""
    level = [0] * circuit.width
    deepest = 0
    for g in circuit.gates:
        d = 1 + max(level[i] for i in g.lines)
        for i in g.lines:
            level[i] = d
        deepest = max(deepest, d)
    return deepest


def compute(circuit: Circuit,
            cost_table: Mapping[GateKind, CostTriple] | None = None) -> MetricsReport:
    per_kind = dict(Counter(g.kind for g in circuit.gates))
    return MetricsReport(
        gate_count=len(circuit.gates),
        per_kind=per_kind,
        garbage=circuit.n_garbage,
        constants=circuit.n_constants,
        depth=depth(circuit),
        total=summarize_multiset(per_kind, cost_table),
    )


def ftfa_pairs(circuit: Circuit) -> list[tuple[int, int]]:
    """Index pairs of IG gates wired as one two-IG full adder block.

    The second IG must act on the same (B, C, D) lines as the first, and no
    gate in between may modify those lines.  Port A of every gate kind is a
    pass-through, so gates that only touch them on port A do not count.
    """
    pairs = []
    used = set()
    last_writer = {}
    for j, g in enumerate(circuit.gates):
        if g.kind is GateKind.IG:
            tail = g.lines[1:]
            writers = {last_writer.get(i) for i in tail}
            if len(writers) == 1:
                (i,) = writers
                if (i is not None and i not in used
                        and circuit.gates[i].kind is GateKind.IG
                        and circuit.gates[i].lines[1:] == tail):
                    pairs.append((i, j))
                    used.update((i, j))
        for line in g.lines[1:]:
            last_writer[line] = j
    return pairs


def reversible_units(circuit: Circuit) -> int:
    """Gate count with each two-IG full adder block counted once."""
    return len(circuit.gates) - len(ftfa_pairs(circuit))


def load_cost_table(text: str) -> dict[GateKind, CostTriple]:
    """Parse ``{"ig": [4, 3, 1], ...}``; missing kinds keep their defaults."""
    table = dict(DEFAULT_COSTS)
    for name, triple in json.loads(text).items():
        table[GateKind.parse(name)] = CostTriple(*triple)
    return table


@dataclass(frozen=True)
class FunctionTable:
    """A possibly irreversible Boolean function given by its output rows.

    ``rows[i]`` is the output pattern (integer, first output most significant)
    for the input whose ``n_in``-bit encoding is ``i``.
    """

    n_in: int
    n_out: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != 2 ** self.n_in:
            raise ValueError(f"need {2 ** self.n_in} rows, got {len(self.rows)}")
        if any(not 0 <= r < 2 ** self.n_out for r in self.rows):
            raise ValueError("row value exceeds output width")

    @classmethod
    def from_callable(cls, n_in: int, n_out: int, fn: Callable) -> "FunctionTable":
        rows = []
        for i in range(2 ** n_in):
            bits = [(i >> (n_in - 1 - k)) & 1 for k in range(n_in)]
            out = fn(*bits)
            if isinstance(out, int):
                out = (out,)
            rows.append(sum(int(b) << (n_out - 1 - k) for k, b in enumerate(out)))
        return cls(n_in, n_out, tuple(rows))

    @classmethod
    def from_bits(cls, *columns: str) -> "FunctionTable":
        """One string of ``2**n_in`` output bits per output, e.g. ``"0110"``."""
        n = len(columns[0])
        n_in = n.bit_length() - 1
        if 2 ** n_in != n or any(len(c) != n for c in columns):
            raise ValueError("each output column needs 2**n_in bits")
        rows = tuple(int("".join(c[i] for c in columns), 2) for i in range(n))
        return cls(n_in, len(columns), rows)

    def column(self, k: int) -> tuple[int, ...]:
        return tuple((r >> (self.n_out - 1 - k)) & 1 for r in self.rows)


def full_adder_table() -> FunctionTable:
    return FunctionTable.from_callable(
        3, 2, lambda a, b, c: (a ^ b ^ c, ((a ^ b) & c) ^ (a & b)))


def identity_table(n: int = 1) -> FunctionTable:
    return FunctionTable(n, n, tuple(range(2 ** n)))


def min_garbage_lower_bound(f: FunctionTable, parity_constrained: bool) -> int:
    """Fewest garbage outputs any reversible embedding of ``f`` can have.

    Inputs sharing one output pattern must be told apart by garbage alone.
    Under parity preservation the garbage parity is pinned for each input
    parity, so only half of the ``2**g`` garbage codes serve a given class.
    """
    by_output = Counter(f.rows)
    bound = math.ceil(math.log2(max(by_output.values())))
    if not parity_constrained:
        return bound

    classes = Counter()
    mismatch = False
    for i, out in enumerate(f.rows):
        p_in = bin(i).count("1") & 1
        classes[out, p_in] += 1
        mismatch |= p_in != (bin(out).count("1") & 1)
    mu_p = max(classes.values())
    if mu_p == 1 and not mismatch:
        return bound
    g = 1
    while 2 ** (g - 1) < mu_p:
        g += 1
    return max(bound, g)


def min_constant_inputs(f: FunctionTable, garbage: int) -> int:
    if garbage < min_garbage_lower_bound(f, parity_constrained=False):
        raise ValueError(f"{garbage} garbage outputs cannot embed this function reversibly")
    return f.n_out + garbage - f.n_in
