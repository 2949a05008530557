import itertools
import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ftrev.circuit import empty
from ftrev.gates import EQUATION_COSTS, CostTriple, GateKind
from ftrev.metrics import (FunctionTable, UnknownCost, compute, depth, full_adder_table,
                           identity_table, load_cost_table, min_constant_inputs,
                           min_garbage_lower_bound, reversible_units, summarize_multiset)
from ftrev.synth import build_bcd_digit, build_ftfa, build_ripple


def test_compute_ftfa():
    m = compute(build_ftfa())
    assert (m.gate_count, m.garbage, m.constants, m.depth) == (2, 3, 2, 2)
    assert m.total == CostTriple(8, 6, 2)
    assert m.per_kind == {GateKind.IG: 2}


@pytest.mark.parametrize("n", range(1, 9))
def test_compute_ripple(n):
    m = compute(build_ripple(n))
    assert (m.gate_count, m.garbage, m.constants, m.depth) == (2 * n, 3 * n, 2 * n, 2 * n)


def test_compute_empty():
    m = compute(empty(1))
    assert (m.gate_count, m.garbage, m.constants, m.depth) == (0, 0, 0, 0)
    assert m.total == CostTriple()


def test_depth_bounded_by_gate_count():
    for c in (build_ftfa(), build_ripple(3), build_bcd_digit()):
        assert depth(c) <= len(c.gates)


def test_summarize_multiset():
    assert summarize_multiset({GateKind.FRG: 4}) == CostTriple(8, 16, 4)
    assert summarize_multiset({GateKind.FRG: 2, GateKind.F2G: 4}) == CostTriple(12, 8, 2)
    assert summarize_multiset({}) == CostTriple(0, 0, 0)
    with pytest.raises(UnknownCost):
        summarize_multiset({GateKind.IG: 1}, {GateKind.FRG: CostTriple(1, 1, 1)})


counts = st.dictionaries(st.sampled_from(list(GateKind)), st.integers(0, 20))


@given(counts, counts)
def test_summarize_is_linear(m1, m2):
    merged = {k: m1.get(k, 0) + m2.get(k, 0) for k in set(m1) | set(m2)}
    assert summarize_multiset(merged) == summarize_multiset(m1) + summarize_multiset(m2)


def test_alternative_cost_table():
    assert compute(build_ftfa(), EQUATION_COSTS).total == CostTriple(6, 4, 2)
    table = load_cost_table(json.dumps({"ig": [1, 1, 1]}))
    assert compute(build_ftfa(), table).total == CostTriple(2, 2, 2)


def test_units():
    assert reversible_units(build_ftfa()) == 1
    assert reversible_units(build_ripple(4)) == 4
    assert reversible_units(build_bcd_digit()) == 16


def _oracle_min_garbage(f: FunctionTable, parity: bool, limit: int = 4) -> int:
    """Smallest g for which garbage codes can actually be assigned (backtracking)."""
    def parity_of(x):
        return bin(x).count("1") & 1

    for g in range(limit + 1):
        if f.n_out + g < f.n_in:
            continue
        taken = set()

        def place(i):
            if i == len(f.rows):
                return True
            out = f.rows[i]
            for code in range(2 ** g):
                if (out, code) in taken:
                    continue
                if parity and parity_of(i) != parity_of(out) ^ parity_of(code):
                    continue
                taken.add((out, code))
                if place(i + 1):
                    return True
                taken.discard((out, code))
            return False

        if place(0):
            return g
    raise AssertionError("limit too small")


def test_full_adder_table_rows():
    fa = full_adder_table()
    # inputs 001, 010, 100 all map to S=1, Cout=0
    assert {fa.rows[1], fa.rows[2], fa.rows[4]} == {0b10}


def test_lower_bounds_full_adder():
    fa = full_adder_table()
    assert min_garbage_lower_bound(fa, parity_constrained=True) == 3
    assert min_garbage_lower_bound(fa, parity_constrained=False) == 2
    assert _oracle_min_garbage(fa, True) == 3
    assert _oracle_min_garbage(fa, False) == 2


def test_lower_bound_identity():
    assert min_garbage_lower_bound(identity_table(1), True) == 0
    assert min_garbage_lower_bound(identity_table(1), False) == 0


@pytest.mark.parametrize("n_in,n_out", [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2)])
def test_lower_bound_matches_oracle(n_in, n_out):
    space = itertools.product(range(2 ** n_out), repeat=2 ** n_in)
    if (n_in, n_out) == (3, 2):
        rng = random.Random(7)
        space = [tuple(rng.randrange(4) for _ in range(8)) for _ in range(400)]
    for rows in space:
        f = FunctionTable(n_in, n_out, rows)
        for parity in (False, True):
            assert min_garbage_lower_bound(f, parity) == _oracle_min_garbage(f, parity), rows


def test_min_constant_inputs():
    fa = full_adder_table()
    assert min_constant_inputs(fa, 3) == 2
    assert min_constant_inputs(fa, 2) == 1
    assert min_constant_inputs(identity_table(1), 0) == 0
    with pytest.raises(ValueError):
        min_constant_inputs(fa, 1)


def test_garbage_meets_bound_for_generated_adders():
    fa = full_adder_table()
    assert compute(build_ftfa()).garbage >= min_garbage_lower_bound(fa, True)


def test_function_table_from_bits():
    f = FunctionTable.from_bits("0110", "0001")
    assert f.n_in == 2 and f.n_out == 2
    assert f.column(0) == (0, 1, 1, 0) and f.column(1) == (0, 0, 0, 1)
    with pytest.raises(ValueError):
        FunctionTable.from_bits("011")


def test_report_serialization():
    d = compute(build_ftfa()).to_dict()
    assert set(d) == {"gate_count", "per_kind", "garbage", "constants", "depth", "total"}
    assert d["total"] == {"alpha": 8, "beta": 6, "delta": 2}
