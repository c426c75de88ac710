import pytest
from hypothesis import given, settings

from tests.conftest import D3, SHIFTED, VT, diagrams, seeds
from vknot.core.errors import CoveringError, CutSystemError, NumberingError
from vknot.covering.cover import (
    component_shifts,
    cover,
    covering_id,
    expected_component_count,
    induced_numbering,
    sheet_trace,
)
from vknot.cuts.canonical import canonical_cut_system, lifted_cut_system
from vknot.cuts.moves import perturb
from vknot.cuts.system import EMPTY_CUTS, CutSystem
from vknot.gauss.canonical import canonical_key
from vknot.gauss.codec import parse_diagram, serialize
from vknot.gauss.diagram import SemiArcId, disjoint_union
from vknot.gauss.generate import generate, Hopf, random_diagram, torus_2q
from vknot.gauss.validate import is_valid_diagram
from vknot.helpers.lcg import Lcg
from vknot.invariants.linking import linking_matrix, odd_writhe
from vknot.numbering.constraints import ArcId, build_constraints
from vknot.numbering.solver import Numbering, solve


def _covering_numbering(d, p, m):
    s = cover(d, p, m)
    f = solve(build_constraints(d, p))
    return s, induced_numbering(s, f)


def test_shift_vectors():
    d, p = parse_diagram(SHIFTED)
    assert component_shifts(d, p).t == (-2, 2)
    assert component_shifts(generate(Hopf()), EMPTY_CUTS).t == (0, 0)
    vt = parse_diagram(VT)[0]
    assert component_shifts(vt, canonical_cut_system(vt)).t == (0,)


@given(diagrams(max_crossings=6, max_components=3), seeds)
def test_shifts_sum_to_zero(d, seed):
    p, _ = perturb(d, canonical_cut_system(d), 6, seed)
    assert component_shifts(d, p).total == 0


def test_shifted_components():
    d, p = parse_diagram(SHIFTED)
    for m, expected in [(1, 2), (2, 4), (3, 2), (4, 4), (5, 2)]:
        s = cover(d, p, m)
        assert s.diagram.component_count == expected
        assert expected_component_count(component_shifts(d, p), m) == expected
        assert is_valid_diagram(s.diagram)


def test_virtual_trefoil_double_cover_by_hand(vt):
    """Sheet walk traced by hand for the canonical marks."""
    s = cover(vt, canonical_cut_system(vt), 2)
    assert serialize(s.diagram) == "O1+ O4+ U2+ U3+\nO2+ O3+ U1+ U4+"
    assert s.crossing_origin == {1: (1, 0), 2: (1, 1), 3: (2, 0), 4: (2, 1)}
    assert [(o.component, o.sheet, o.laps) for o in s.component_origin] == [(0, 0, 1), (0, 1, 1)]
    assert linking_matrix(s.diagram) == ((0, 2), (2, 0))
    assert [odd_writhe(s.diagram, i) for i in range(2)] == [0, 0]
    f = induced_numbering(s, solve(build_constraints(vt, canonical_cut_system(vt))))
    assert [f[ArcId(SemiArcId(0, j), 0)] for j in range(4)] == [0, 1, 0, 1]
    assert [f[ArcId(SemiArcId(1, j), 0)] for j in range(4)] == [1, 0, 1, 0]
    assert f.satisfies(build_constraints(s.diagram, EMPTY_CUTS))


def test_sheet_trace(vt):
    s = cover(vt, canonical_cut_system(vt), 3)
    trace = sheet_trace(s)
    assert list(trace) == [str(i) for i in range(1, 7)]
    assert trace["5"] == [2, 1]
    assert covering_id(2, 1, 3) == 5


def test_cover_rejects_bad_input(vt):
    with pytest.raises(CoveringError):
        cover(vt, canonical_cut_system(vt), 0)
    with pytest.raises(CutSystemError):
        cover(vt, EMPTY_CUTS, 2)
    with pytest.raises(CutSystemError):
        component_shifts(vt, EMPTY_CUTS)


def test_induced_numbering_needs_a_base_solution(vt):
    p = canonical_cut_system(vt)
    s = cover(vt, p, 2)
    with pytest.raises(NumberingError):
        induced_numbering(s, Numbering(0, {}))
    f = solve(build_constraints(vt, p))
    with pytest.raises(NumberingError):
        induced_numbering(s, Numbering(2, f.values))


def test_one_sheet_is_trivial(vt):
    p = canonical_cut_system(vt)
    s, f = _covering_numbering(vt, p, 1)
    assert set(f.values.values()) == {0}
    assert s.diagram == vt


@given(diagrams(max_crossings=6, max_components=3), seeds)
def test_one_sheet_cover_is_the_diagram(d, seed):
    p, _ = perturb(d, canonical_cut_system(d), 5, seed)
    assert canonical_key(cover(d, p, 1).diagram) == canonical_key(d)


def test_free_loops_are_covered():
    d, p = parse_diagram("() !+ !-\nO1+ U1+")
    s, f = _covering_numbering(d, p, 3)
    assert s.diagram.component_count == 6
    assert sum(1 for i in range(6) if s.diagram.is_free_loop(i)) == 3
    assert f.satisfies(build_constraints(s.diagram, EMPTY_CUTS))


def test_knot_covers():
    """200 random knots, canonical marks, m in {2, 3, 5}: m components, numberable mod m."""
    for seed in range(200):
        d = random_diagram(1 + Lcg(seed).below(7), 1, seed)
        p = canonical_cut_system(d)
        shifts = component_shifts(d, p)
        base = solve(build_constraints(d, p))
        for m in (2, 3, 5):
            s = cover(d, p, m)
            assert s.diagram.component_count == m == expected_component_count(shifts, m)
            assert s.diagram.crossing_count == m * d.crossing_count
            assert s.diagram.passage_count == m * d.passage_count
            f = induced_numbering(s, base)
            assert f.satisfies(build_constraints(s.diagram, EMPTY_CUTS))
            assert isinstance(solve(build_constraints(s.diagram, EMPTY_CUTS), m), Numbering)


@given(diagrams(max_crossings=5, max_components=3), seeds)
def test_component_count_formula(d, seed):
    p, _ = perturb(d, canonical_cut_system(d), 8, seed)
    shifts = component_shifts(d, p)
    for m in (2, 3, 4):
        s = cover(d, p, m)
        assert s.diagram.component_count == expected_component_count(shifts, m)
        assert sorted(s.crossing_origin.values()) == sorted((c, k) for c in d.crossing_ids for k in range(m))
        for new_id, (orig, _) in s.crossing_origin.items():
            assert s.diagram.sign(new_id) == d.sign(orig)


def test_cover_key_independent_of_cut_system():
    """200 cases: moving the marks by cut moves keeps the covering up to relabeling."""
    for seed in range(200):
        rng = Lcg(seed)
        d = random_diagram(1 + rng.below(4), 1 + rng.below(2), seed)
        p1, _ = perturb(d, canonical_cut_system(d), rng.below(4), seed + 1)
        p2, _ = perturb(d, p1, 1 + rng.below(10), seed + 2)
        for m in (2, 3):
            assert canonical_key(cover(d, p1, m).diagram) == canonical_key(cover(d, p2, m).diagram), (seed, m)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("d", [torus_2q(2), torus_2q(3), torus_2q(4), torus_2q(5, -1), generate(Hopf())])
def test_classical_covers_are_disjoint_copies(d, m):
    union = canonical_key(disjoint_union([d] * m))
    assert canonical_key(cover(d, canonical_cut_system(d), m).diagram) == union
    assert canonical_key(cover(d, lifted_cut_system(d, m), m).diagram) == union


def test_mod_two_diagram_cover_is_two_copies():
    d, _ = parse_diagram(D3)
    union = canonical_key(disjoint_union([d, d]))
    assert canonical_key(cover(d, lifted_cut_system(d, 2), 2).diagram) == union
    assert canonical_key(cover(d, canonical_cut_system(d), 2).diagram) == union


@settings(max_examples=60)
@given(diagrams(max_crossings=4, max_components=2))
def test_mod_m_numberable_covers_are_copies(d):
    for m in (2, 3):
        lifted = lifted_cut_system(d, m)
        if lifted is None:
            continue
        union = canonical_key(disjoint_union([d] * m))
        assert canonical_key(cover(d, lifted, m).diagram) == union
        assert canonical_key(cover(d, canonical_cut_system(d), m).diagram) == union


def test_empty_diagram_covers_to_nothing():
    d, p = parse_diagram("")
    assert cover(d, p, 3).diagram.component_count == 0
    assert cover(d, CutSystem(), 3).crossing_origin == {}
