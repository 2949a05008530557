import pytest

from ftrev.circuit import CircuitError, empty
from ftrev.netlist import NetlistError, parse_netlist, serialize
from ftrev.synth import (BOOLEAN_TARGETS, build_bcd_chain, build_bcd_digit, build_ftfa,
                         build_ripple, realize_boolean)

FTFA_DOC = """\
# two-IG full adder
.version 1
.numvars 5
.variables a b cin c0 c1
.inputs A B Cin - -
.outputs - S - Cout -
.constants ---00
.garbage g-g-g
ig a b c0 c1
ig cin b c0 c1
.end
"""


def generated():
    yield build_ftfa()
    for n in range(1, 9):
        yield build_ripple(n)
    yield build_bcd_digit()
    for d in range(1, 5):
        yield build_bcd_chain(d)
    for fn in BOOLEAN_TARGETS:
        yield realize_boolean(fn)


def test_roundtrip_generators():
    for c in generated():
        text = serialize(c)
        assert parse_netlist(text) == c
        assert serialize(parse_netlist(text)) == text


def test_ftfa_document_matches_generator():
    parsed = parse_netlist(FTFA_DOC)
    built = build_ftfa()
    assert parsed.gates == built.gates
    assert parsed.inputs == built.inputs
    assert parsed.outputs == built.outputs


def test_canonical_form():
    messy = FTFA_DOC.replace("ig a b c0 c1", "IG   a  b c0 c1   # first level")
    assert serialize(parse_netlist(messy)) == serialize(parse_netlist(FTFA_DOC))
    assert serialize(parse_netlist(FTFA_DOC)).startswith(".version 1\n.numvars 5\n")


def test_minimal_document():
    c = parse_netlist(".version 1\n.numvars 1\n.variables x0\n.constants -\n.garbage -\n.end\n")
    assert c == empty(1)
    assert len(serialize(c).splitlines()) == 6


def test_ftfa_has_two_ig_lines():
    lines = serialize(build_ftfa()).splitlines()
    assert sum(line.startswith("ig ") for line in lines) == 2
    assert serialize(build_ftfa()) == serialize(build_ftfa())


def test_duplicate_line_error():
    doc = ".version 1\n.numvars 4\n.variables a b c d\n.constants ----\n.garbage ----\n" \
          "ig a a b c\n.end\n"
    with pytest.raises(NetlistError) as e:
        parse_netlist(doc)
    assert e.value.lineno == 6
    assert isinstance(e.value.__cause__, CircuitError)


@pytest.mark.parametrize("doc,lineno", [
    (FTFA_DOC.replace(".end\n", ""), None),
    (FTFA_DOC.replace("---00", "---0"), 7),
    (FTFA_DOC.replace("---00", "---02"), 7),
    (FTFA_DOC.replace("g-g-g", "g-x-g"), 8),
    (FTFA_DOC.replace("ig cin", "nft cin"), 10),
    (FTFA_DOC.replace("ig cin b", "ig cin q"), 10),
    (FTFA_DOC.replace(".version 1", ".version 2"), 2),
    (FTFA_DOC.replace(".numvars 5", ".numvars five"), 3),
    (FTFA_DOC.replace(".end", ".end\nig a b c0 c1"), 12),
    (FTFA_DOC.replace(".inputs A B Cin - -", ".inputs A B - - -"), 5),
    (FTFA_DOC.replace("ig cin b c0 c1", "ig cin b c0"), 10),
])
def test_syntax_errors(doc, lineno):
    with pytest.raises(NetlistError) as e:
        parse_netlist(doc)
    assert e.value.lineno == lineno
