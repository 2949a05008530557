import pytest
from hypothesis import strategies as st

from ftrev.circuit import GARBAGE, NamedInput, assemble
from ftrev.gates import GateKind, spec

ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    if call.when == "call":
        item.rep_call = outcome.get_result()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@st.composite
def circuits(draw, kinds=tuple(GateKind), max_width=6, max_gates=6):
    """Random valid circuits; every line is a named input, outputs all garbage."""
    width = draw(st.integers(1, max_width))
    usable = [k for k in kinds if spec(k).arity <= width]
    gates = []
    if usable:
        for _ in range(draw(st.integers(0, max_gates))):
            kind = draw(st.sampled_from(usable))
            lines = draw(st.permutations(range(width)))[: spec(kind).arity]
            gates.append((kind, lines))
    return assemble(width, [NamedInput(f"x{i}") for i in range(width)], gates,
                    [GARBAGE] * width)


@pytest.fixture
def ftfa():
    from ftrev.synth import build_ftfa
    return build_ftfa()
