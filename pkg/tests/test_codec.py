import pytest
from hypothesis import given

from tests.conftest import SHIFTED, VT_CANONICAL, diagrams, seeds
from tests.oracles import random_marks
from vknot.core.errors import CutSystemError, GaussSyntaxError, PairingError, SignConflictError
from vknot.cuts.system import CutSystem
from vknot.gauss.codec import parse_diagram, read_gauss_file, serialize
from vknot.gauss.diagram import Passage, Role, SemiArcId


def test_parse_single_component():
    d, p = parse_diagram("O1+ U2- O3+ U1+ O2- U3+")
    assert d.component_count == 1
    assert d.components[0][0] == Passage(1, Role.OVER)
    assert d.sign(2) == -1
    assert p.is_empty()


def test_comments_and_blank_lines_are_skipped():
    d, _ = parse_diagram("# hopf link\n\nO1+ U2+   # first\nU1+ O2+\n")
    assert d.component_count == 2
    assert serialize(d) == "O1+ U2+\nU1+ O2+"


def test_marks_go_to_the_gap_after_the_previous_passage():
    d, p = parse_diagram(VT_CANONICAL)
    assert p.on(SemiArcId(0, 0)) == (1,)
    assert p.on(SemiArcId(0, 1)) == ()
    assert p.on(SemiArcId(0, 2)) == (-1,)
    assert p.on(SemiArcId(0, 3)) == (-1, 1)


def test_leading_marks_follow_trailing_ones():
    d, p = parse_diagram("!- O1+ U1+ !+")
    assert p.on(SemiArcId(0, 1)) == (1, -1)
    assert serialize(d, p) == "O1+ U1+ !+ !-"


def test_free_loops():
    d, p = parse_diagram("()\n() !+ !-\n!+")
    assert d.component_count == 3
    assert all(d.is_free_loop(i) for i in range(3))
    assert p.on(SemiArcId(1, 0)) == (1, -1)
    assert p.on(SemiArcId(2, 0)) == (1,)
    assert serialize(d, p) == "()\n() !+ !-\n() !+"


def test_empty_text_is_the_empty_diagram():
    d, p = parse_diagram("")
    assert d.component_count == 0
    assert serialize(d, p) == ""


@pytest.mark.parametrize(
    "text",
    ["O1+ X", "O1 U1", "O0+ U0+", "O1+ () U1+", "() O1+ U1+", "O1* U1*"],
)
def test_syntax_errors(text):
    with pytest.raises(GaussSyntaxError):
        parse_diagram(text)


def test_syntax_error_carries_line_and_token():
    with pytest.raises(GaussSyntaxError) as info:
        parse_diagram("O1+ U1+\nO2+ Q7 U2+")
    assert info.value.line == 2
    assert info.value.token == "Q7"
    assert "line 2" in str(info.value)


@pytest.mark.parametrize("text", ["O1+", "O1+ O1+ U1+", "U3-"])
def test_pairing_errors(text):
    with pytest.raises(PairingError):
        parse_diagram(text)


def test_sign_conflict():
    with pytest.raises(SignConflictError) as info:
        parse_diagram("O1+ U1-")
    assert info.value.crossing_id == 1


def test_serialize_rejects_marks_in_missing_gaps():
    d, _ = parse_diagram("O1+ U1+")
    with pytest.raises(CutSystemError):
        serialize(d, CutSystem.from_gaps({SemiArcId(0, 5): [1]}))


def test_read_gauss_file(gauss_file):
    path = gauss_file("shifted.gauss", SHIFTED)
    d, p = read_gauss_file(path)
    assert serialize(d, p) == SHIFTED


@given(diagrams(max_crossings=6, max_components=3), seeds)
def test_parse_serialize_round_trip(d, seed):
    p = random_marks(d, seed, 6)
    text = serialize(d, p)
    d2, p2 = parse_diagram(text)
    assert d2 == d
    assert p2 == p
    assert serialize(d2, p2) == text
