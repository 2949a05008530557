"""Reversible gate library.

Every gate is an exact bijection on ``arity`` bits.  Transfer functions are
written with ``^`` and ``&`` only, so the same code evaluates python ints
(0/1) and numpy ``uint8`` arrays of 0/1 values element-wise.  Port A is the
most significant bit whenever a row is encoded as an integer.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, NamedTuple, Sequence


class ArityError(ValueError):
    """Wrong number of bits supplied to a gate."""


class GateKind(str, Enum):
    FG = "fg"
    PG = "pg"
    TG = "tg"
    FRG = "frg"
    F2G = "f2g"
    PPHCG = "pphcg"
    IG = "ig"

    @property
    def arity(self) -> int:
        return SPECS[self].arity

    @classmethod
    def parse(cls, mnemonic: str) -> "GateKind":
        try:
            return cls(mnemonic.lower())
        except ValueError:
            raise ValueError(f"unknown gate mnemonic {mnemonic!r}") from None


@dataclass(frozen=True)
class CostTriple:
    """Counts of two-input XORs (alpha), two-input ANDs (beta) and NOTs (delta)."""

    alpha: int = 0
    beta: int = 0
    delta: int = 0

    def __post_init__(self):
        if min(self.alpha, self.beta, self.delta) < 0:
            raise ValueError(f"negative cost component in {self!r}")

    def __add__(self, other: "CostTriple") -> "CostTriple":
        return CostTriple(self.alpha + other.alpha, self.beta + other.beta,
                          self.delta + other.delta)

    def __mul__(self, n: int) -> "CostTriple":
        return CostTriple(self.alpha * n, self.beta * n, self.delta * n)

    __rmul__ = __mul__

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.delta)

    def __str__(self) -> str:
        return f"{self.alpha}α+{self.beta}β+{self.delta}δ"


def _not(x):
    return x ^ 1


def _fg(a, b):
    return a, a ^ b


def _pg(a, b, c):
    return a, a ^ b, (a & b) ^ c


def _tg(a, b, c):
    return a, b, (a & b) ^ c


def _frg(a, b, c):
    # controlled swap of (b, c) on a
    na = _not(a)
    return a, (na & b) ^ (a & c), (na & c) ^ (a & b)


def _f2g(a, b, c):
    return a, a ^ b, a ^ c


def _pphcg(a, b, c, d):
    # Stand-in realization: only the third output (a ^ b ^ c) is relied upon.
    return a, a ^ b, a ^ b ^ c, b ^ d


def _ig(a, b, c, d):
    return a, a ^ b, (a & b) ^ c, (a & _not(b)) ^ d


@dataclass(frozen=True)
class GateSpec:
    kind: GateKind
    arity: int
    parity_preserving: bool
    cost: CostTriple
    fn: Callable = None

    def __call__(self, *bits):
        return self.fn(*bits)


SPECS: dict[GateKind, GateSpec] = {}


def _register(kind, arity, parity, cost, fn):
    SPECS[kind] = GateSpec(kind, arity, parity, CostTriple(*cost), fn)


# IG/FRG/F2G costs reproduce the fault tolerant full adder comparison totals;
# the rest are counted from the equations above.
_register(GateKind.FG, 2, False, (1, 0, 0), _fg)
_register(GateKind.PG, 3, False, (2, 1, 0), _pg)
_register(GateKind.TG, 3, False, (1, 1, 0), _tg)
_register(GateKind.FRG, 3, True, (2, 4, 1), _frg)
_register(GateKind.F2G, 3, True, (2, 0, 0), _f2g)
_register(GateKind.PPHCG, 4, True, (4, 0, 0), _pphcg)
_register(GateKind.IG, 4, True, (4, 3, 1), _ig)

PARITY_PRESERVING = frozenset(k for k, s in SPECS.items() if s.parity_preserving)

DEFAULT_COSTS: dict[GateKind, CostTriple] = {k: s.cost for k, s in SPECS.items()}

# Direct operator count of the IG equations, (a, a^b, ab^c, a~b^d).
EQUATION_COSTS: dict[GateKind, CostTriple] = {**DEFAULT_COSTS,
                                             GateKind.IG: CostTriple(3, 2, 1)}


def spec(kind: GateKind) -> GateSpec:
    return SPECS[GateKind(kind)]


def apply(kind: GateKind, inputs: Sequence[int]) -> tuple[int, ...]:
    """Evaluate ``kind`` on one input pattern (port A first)."""
    s = spec(kind)
    if len(inputs) != s.arity:
        raise ArityError(f"{s.kind.name} takes {s.arity} bits, got {len(inputs)}")
    for bit in inputs:
        if bit not in (0, 1):
            raise ValueError(f"not a bit: {bit!r}")
    return tuple(int(v) for v in s.fn(*inputs))


def int_to_bits(value: int, width: int) -> tuple[int, ...]:
    return tuple((value >> (width - 1 - i)) & 1 for i in range(width))


def bits_to_int(bits: Sequence[int]) -> int:
    out = 0
    for b in bits:
        out = (out << 1) | int(b)
    return out


class Row(NamedTuple):
    input: tuple[int, ...]
    output: tuple[int, ...]


def truth_table(kind: GateKind) -> list[Row]:
    n = spec(kind).arity
    rows = []
    for i in range(2 ** n):
        x = int_to_bits(i, n)
        rows.append(Row(x, apply(kind, x)))
    return rows


def permutation(kind: GateKind) -> list[int]:
    """The gate as a permutation of ``range(2**arity)``."""
    return [bits_to_int(r.output) for r in truth_table(kind)]


def inverse_permutation(kind: GateKind) -> list[int]:
    perm = permutation(kind)
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return inv


class GateCheck(NamedTuple):
    reversible: bool
    parity_preserving: bool
    counterexample: tuple[int, ...] | None


def check_gate(kind: GateKind) -> GateCheck:
    """Exhaustively test injectivity and input/output parity agreement."""
    seen = set()
    counterexample = None
    for row in truth_table(kind):
        seen.add(row.output)
        if counterexample is None and sum(row.input) % 2 != sum(row.output) % 2:
            counterexample = row.input
    reversible = len(seen) == 2 ** spec(kind).arity
    return GateCheck(reversible, counterexample is None, counterexample)


def cost(kind: GateKind, table: dict[GateKind, CostTriple] | None = None) -> CostTriple:
    return (table or DEFAULT_COSTS)[GateKind(kind)]
