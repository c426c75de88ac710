import pytest
from hypothesis import given

from tests.conftest import diagrams, seeds
from vknot.core.errors import InapplicableMoveError
from vknot.covering.cover import cover
from vknot.cuts.canonical import canonical_cut_system
from vknot.gauss.canonical import canonical_key
from vknot.gauss.codec import parse_diagram, serialize
from vknot.gauss.generate import Hopf, generate, random_diagram, torus_2q
from vknot.gauss.validate import is_valid_diagram
from vknot.helpers.lcg import Lcg
from vknot.invariants.certificate import fingerprint
from vknot.invariants.linking import linking_matrix
from vknot.moves.reidemeister import MoveFamily, RMoveSpec, apply_move, apply_moves, enumerate_sites
from vknot.moves.walk import random_walk
from vknot.schemas.moves import MoveRecord

# three strands: top carries O1 O2, middle U1 O3, bottom U2 U3
TRIANGLE = "O1+ O2+ O4+\nU1+ O3+\nU2+ U3+ U4+"


def _diagram(text: str):
    return parse_diagram(text)[0]


def test_kink_sites():
    assert enumerate_sites(_diagram("O1+ U1+"), MoveFamily.R1_DELETE) == [RMoveSpec(MoveFamily.R1_DELETE, (1,))]
    assert enumerate_sites(_diagram(""), MoveFamily.R1_INSERT) == []
    assert enumerate_sites(torus_2q(3), MoveFamily.R1_DELETE) == []
    assert len(enumerate_sites(torus_2q(3), MoveFamily.R1_INSERT)) == 6 * 4
    assert len(enumerate_sites(generate(Hopf()), MoveFamily.R2_INSERT)) == 10 * 8


def test_kink_on_a_free_loop():
    loop = _diagram("()")
    kink = apply_move(loop, RMoveSpec(MoveFamily.R1_INSERT, (0, 0), "+OU"))
    assert serialize(kink) == "O1+ U1+"
    assert serialize(apply_move(kink, RMoveSpec(MoveFamily.R1_DELETE, (1,)))) == "()"


@pytest.mark.parametrize("variant", ["+OU", "+UO", "-OU", "-UO"])
def test_kink_insert_then_delete(variant):
    d = torus_2q(3)
    kinked = apply_move(d, RMoveSpec(MoveFamily.R1_INSERT, (0, 2), variant))
    assert kinked.crossing_count == 4
    assert RMoveSpec(MoveFamily.R1_DELETE, (4,)) in enumerate_sites(kinked, MoveFamily.R1_DELETE)
    assert apply_move(kinked, RMoveSpec(MoveFamily.R1_DELETE, (4,))) == d


def test_bigon_across_components():
    hopf = generate(Hopf())
    d = apply_move(hopf, RMoveSpec(MoveFamily.R2_INSERT, (0, 0, 1, 0), "+P1"))
    assert d.crossing_count == 4
    assert d.sign(3) == -d.sign(4)
    assert linking_matrix(d) == linking_matrix(hopf)
    assert RMoveSpec(MoveFamily.R2_DELETE, (3, 4)) in enumerate_sites(d, MoveFamily.R2_DELETE)
    assert apply_move(d, RMoveSpec(MoveFamily.R2_DELETE, (3, 4))) == hopf


@pytest.mark.parametrize("variant", ["+P1", "+A2", "-P2", "-A1"])
def test_bigon_in_one_gap(variant):
    d = torus_2q(3)
    bigon = apply_move(d, RMoveSpec(MoveFamily.R2_INSERT, (0, 0, 0, 0), variant))
    assert is_valid_diagram(bigon)
    assert fingerprint(bigon) == fingerprint(d)
    assert apply_move(bigon, RMoveSpec(MoveFamily.R2_DELETE, (4, 5))) == d


def test_triangle_move_is_an_involution():
    d = _diagram(TRIANGLE)
    mv = RMoveSpec(MoveFamily.R3, (1, 2, 3))
    assert mv in enumerate_sites(d, MoveFamily.R3)
    moved = apply_move(d, mv)
    assert serialize(moved) == "O2+ O1+ O4+\nO3+ U1+\nU3+ U2+ U4+"
    assert fingerprint(moved) == fingerprint(d)
    assert mv in enumerate_sites(moved, MoveFamily.R3)
    assert apply_move(moved, mv) == d


def test_triangle_needs_compatible_signs():
    d = _diagram(TRIANGLE.replace("3+", "3-"))
    assert RMoveSpec(MoveFamily.R3, (1, 2, 3)) not in enumerate_sites(d, MoveFamily.R3)
    with pytest.raises(InapplicableMoveError):
        apply_move(d, RMoveSpec(MoveFamily.R3, (1, 2, 3)))


@pytest.mark.parametrize(
    "mv",
    [
        RMoveSpec(MoveFamily.R1_DELETE, (1,)),
        RMoveSpec(MoveFamily.R1_INSERT, (0, 0), "+XX"),
        RMoveSpec(MoveFamily.R1_INSERT, (0, 9), "+OU"),
        RMoveSpec(MoveFamily.R2_INSERT, (0, 3, 0, 1), "+P1"),
        RMoveSpec(MoveFamily.R2_INSERT, (0, 0, 0, 1), "+Q1"),
        RMoveSpec(MoveFamily.R2_DELETE, (1, 2)),
        RMoveSpec(MoveFamily.R3, (1, 1, 2)),
        RMoveSpec(MoveFamily.R3, (1, 2, 3)),
    ],
)
def test_inapplicable_moves(mv):
    with pytest.raises(InapplicableMoveError):
        apply_move(torus_2q(3), mv)


def test_spec_rendering_and_records():
    mv = RMoveSpec(MoveFamily.R2_INSERT, (0, 0, 1, 0), "+P1")
    assert str(mv) == "R2insert(0,0,1,0)+P1"
    record = MoveRecord.of(mv)
    assert record.model_dump(mode="json") == {"family": "R2insert", "site": [0, 0, 1, 0], "variant": "+P1"}
    assert record.to_spec() == mv


@given(diagrams(max_crossings=5, max_components=3), seeds)
def test_every_move_keeps_the_diagram_valid(d, seed):
    out, log = random_walk(d, 6, seed)
    assert is_valid_diagram(out)
    assert len(log) == 6
    assert apply_moves(d, log) == out


@given(diagrams(max_crossings=5, max_components=3), seeds)
def test_fingerprint_survives_random_walks(d, seed):
    out, _ = random_walk(d, 8, seed)
    assert fingerprint(out) == fingerprint(d)


def test_covering_fingerprint_survives_random_walks():
    """200 seeded walks of up to 8 moves: covering fingerprints agree for m in {2, 3}."""
    for seed in range(200):
        rng = Lcg(seed)
        d = random_diagram(1 + rng.below(4), 1 + rng.below(2), seed)
        out, _ = random_walk(d, 1 + rng.below(8), seed + 1)
        for m in (2, 3):
            covered = fingerprint(cover(out, canonical_cut_system(out), m).diagram)
            assert covered == fingerprint(cover(d, canonical_cut_system(d), m).diagram), (seed, m)


def test_walk_is_seeded():
    d = torus_2q(3)
    assert random_walk(d, 10, 7) == random_walk(d, 10, 7)
    assert random_walk(d, 0, 7) == (d, [])


def test_walk_stops_without_sites():
    d = torus_2q(3)
    assert random_walk(d, 5, 1, [MoveFamily.R1_DELETE]) == (d, [])


def test_kink_walk_only_adds_kinks():
    d = torus_2q(3)
    out, log = random_walk(d, 3, 11, [MoveFamily.R1_INSERT])
    assert out.crossing_count == 6
    assert all(mv.family == MoveFamily.R1_INSERT for mv in log)
    assert canonical_key(apply_moves(out, [RMoveSpec(MoveFamily.R1_DELETE, (c,)) for c in (6, 5, 4)])) == canonical_key(d)
