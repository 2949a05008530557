import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ftrev.circuit import empty, single_gate
from ftrev.faults import FaultSite, coverage, inject, run_with_fault, sites
from ftrev.gates import PARITY_PRESERVING, GateKind
from ftrev.sim import all_states, run_batch, simulate
from ftrev.synth import build_ripple

from conftest import circuits


def test_site_counts(ftfa):
    assert len(sites(ftfa)) == 15
    assert sites(empty(1)) == [FaultSite(0, 0)]
    r2 = build_ripple(2)
    assert len(sites(r2)) == (len(r2.gates) + 1) * r2.width == 45


def test_input_fault_is_flipped_input(ftfa):
    faulty = run_with_fault(ftfa, {"A": 0, "B": 0, "Cin": 0}, FaultSite(0, 0))
    assert faulty == simulate(ftfa, {"A": 1, "B": 0, "Cin": 0})


def test_output_fault_flips_sum(ftfa):
    s_line = ftfa.line_of_output("S")
    for a in (0, 1):
        for b in (0, 1):
            for c in (0, 1):
                v = {"A": a, "B": b, "Cin": c}
                good = simulate(ftfa, v).named_outputs
                bad = run_with_fault(ftfa, v, FaultSite(2, s_line)).named_outputs
                assert bad == {"S": 1 - good["S"], "Cout": good["Cout"]}


def test_any_fault_changes_parity(ftfa):
    v = {"A": 0, "B": 0, "Cin": 1}
    good = simulate(ftfa, v)
    good_parity = (sum(good.named_outputs.values()) + sum(good.garbage)) % 2
    for site in sites(ftfa):
        bad = run_with_fault(ftfa, v, site)
        assert (sum(bad.named_outputs.values()) + sum(bad.garbage)) % 2 != good_parity


def test_site_out_of_range(ftfa):
    with pytest.raises(ValueError):
        run_with_fault(ftfa, {"A": 0, "B": 0, "Cin": 0}, FaultSite(3, 0))
    with pytest.raises(ValueError):
        run_with_fault(ftfa, {"A": 0, "B": 0, "Cin": 0}, FaultSite(0, 5))


def test_coverage_ftfa(ftfa):
    rep = coverage(ftfa)
    assert rep.total_pairs == 120
    assert rep.detected == 120
    assert rep.coverage == 1.0
    assert rep.undetected == []
    assert 0 < rep.observable_coverage <= 1


def test_coverage_ripple4():
    rep = coverage(build_ripple(4))
    assert rep.coverage == 1.0
    assert rep.total_pairs == (8 + 1) * 17 * 2 ** 9


def test_coverage_pg_incomplete():
    c = single_gate(GateKind.PG)
    rep = coverage(c)
    assert rep.coverage < 1.0
    site, vec = rep.undetected[0]
    # replay the reported pair by hand
    state = np.array(vec, dtype=np.uint8)[:, None]
    out = inject(c, state, site)
    assert out.sum() % 2 == state.sum() % 2


def test_report_json_fields(ftfa):
    d = coverage(ftfa).to_dict()
    assert set(d) == {"total_pairs", "detected", "coverage", "undetected",
                      "observable_coverage"}


@settings(max_examples=40)
@given(circuits(kinds=tuple(PARITY_PRESERVING), max_width=5, max_gates=4))
def test_parity_preserving_circuits_detect_everything(c):
    assert coverage(c).coverage == 1.0


@settings(max_examples=40)
@given(circuits(max_width=5), st.data())
def test_output_step_fault_touches_one_line(c, data):
    line = data.draw(st.integers(0, c.width - 1))
    states = all_states(c.width)
    good = run_batch(c, states)
    bad = inject(c, states, FaultSite(len(c.gates), line))
    diff = (good != bad).any(axis=1)
    assert diff.tolist() == [i == line for i in range(c.width)]


@settings(max_examples=40)
@given(circuits(max_width=5), st.data())
def test_double_injection_cancels(c, data):
    site = data.draw(st.sampled_from(sites(c)))
    states = all_states(c.width)
    assert np.array_equal(inject(c, states, site, site), run_batch(c, states))
