"""Oriented cut point moves at the level of mark sequences.

    I+    insert an adjacent coherent/incoherent pair ("+-" or "-+") at a gap position
    I-    delete an adjacent opposite pair
    II    transpose an adjacent opposite pair (sliding past virtual crossings is invisible)
    III   raise the numbering around a crossing by one
    III'  lower it by one

III/III' touch the four arc-ends next to the crossing: each end either gains a mark
or loses its extremal mark when that mark has the opposite effect. III' applied to a
crossing's own canonical pair replaces it by the complementary pair on the other two
arcs. III then III' at one crossing gives back the original marks.
"""

from dataclasses import dataclass
from enum import Enum

from vknot.core.errors import InapplicableMoveError
from vknot.cuts.system import COHERENT, INCOHERENT, CutSystem
from vknot.gauss.diagram import Diagram, SemiArcId
from vknot.helpers.lcg import Lcg


class CutMoveFamily(str, Enum):
    INSERT = "I+"
    DELETE = "I-"
    TRANSPOSE = "II"
    RAISE = "III"
    LOWER = "III'"


_PAIRS = {"+-": (COHERENT, INCOHERENT), "-+": (INCOHERENT, COHERENT)}


@dataclass(frozen=True, order=True)
class CutMoveSpec:
    family: CutMoveFamily
    site: tuple[int, ...]
    variant: str = ""

    def __str__(self) -> str:
        site = ",".join(str(x) for x in self.site)
        return f"{self.family.value}({site}){self.variant}"


def _gap_of(d: Diagram, mv: CutMoveSpec) -> SemiArcId:
    if len(mv.site) != 3:
        raise InapplicableMoveError(f"{mv}: expected (component, gap, position)")
    comp, gap, _ = mv.site
    if not (0 <= comp < d.component_count and 0 <= gap < d.gap_count(comp)):
        raise InapplicableMoveError(f"{mv}: no such gap")
    return SemiArcId(comp, gap)


def _shift_crossing(d: Diagram, p: CutSystem, crossing_id: int, delta: int) -> CutSystem:
    if crossing_id not in d.sign_map:
        raise InapplicableMoveError(f"no crossing {crossing_id}")
    work: dict[SemiArcId, list[int]] = {}

    def seq(gap: SemiArcId) -> list[int]:
        if gap not in work:
            work[gap] = list(p.on(gap))
        return work[gap]

    for ref in (d.over(crossing_id), d.under(crossing_id)):
        marks = seq(d.in_gap(ref))
        if marks and marks[-1] == -delta:
            marks.pop()
        else:
            marks.append(delta)
    for ref in (d.over(crossing_id), d.under(crossing_id)):
        marks = seq(d.out_gap(ref))
        if marks and marks[0] == delta:
            marks.pop(0)
        else:
            marks.insert(0, -delta)
    return p.replace(work)


def apply_cut_move(d: Diagram, p: CutSystem, mv: CutMoveSpec) -> CutSystem:
    if mv.family in (CutMoveFamily.RAISE, CutMoveFamily.LOWER):
        if len(mv.site) != 1:
            raise InapplicableMoveError(f"{mv}: expected (crossing,)")
        return _shift_crossing(d, p, mv.site[0], 1 if mv.family == CutMoveFamily.RAISE else -1)

    gap = _gap_of(d, mv)
    pos = mv.site[2]
    marks = list(p.on(gap))

    if mv.family == CutMoveFamily.INSERT:
        if mv.variant not in _PAIRS or not (0 <= pos <= len(marks)):
            raise InapplicableMoveError(f"{mv}: bad insert position or variant")
        marks[pos:pos] = _PAIRS[mv.variant]
        return p.replace({gap: marks})

    if not (0 <= pos < len(marks) - 1) or marks[pos] == marks[pos + 1]:
        raise InapplicableMoveError(f"{mv}: needs two adjacent opposite marks")
    if mv.family == CutMoveFamily.DELETE:
        del marks[pos:pos + 2]
    else:
        marks[pos], marks[pos + 1] = marks[pos + 1], marks[pos]
    return p.replace({gap: marks})


def enumerate_cut_moves(d: Diagram, p: CutSystem) -> list[CutMoveSpec]:
    out: list[CutMoveSpec] = []
    for gap in d.semi_arcs():
        marks = p.on(gap)
        for pos in range(len(marks) + 1):
            for variant in _PAIRS:
                out.append(CutMoveSpec(CutMoveFamily.INSERT, (gap.component, gap.gap, pos), variant))
        for pos in range(len(marks) - 1):
            if marks[pos] != marks[pos + 1]:
                out.append(CutMoveSpec(CutMoveFamily.DELETE, (gap.component, gap.gap, pos)))
                out.append(CutMoveSpec(CutMoveFamily.TRANSPOSE, (gap.component, gap.gap, pos)))
    for cid in d.crossing_ids:
        out.append(CutMoveSpec(CutMoveFamily.RAISE, (cid,)))
        out.append(CutMoveSpec(CutMoveFamily.LOWER, (cid,)))
    return out


def perturb(d: Diagram, p: CutSystem, steps: int, seed: int) -> tuple[CutSystem, list[CutMoveSpec]]:
    """Seeded walk: a family uniformly among those with sites, then one of its sites."""
    rng = Lcg(seed)
    log: list[CutMoveSpec] = []
    for _ in range(steps):
        by_family: dict[CutMoveFamily, list[CutMoveSpec]] = {}
        for mv in enumerate_cut_moves(d, p):
            by_family.setdefault(mv.family, []).append(mv)
        if not by_family:
            break
        family = rng.choice([f for f in CutMoveFamily if f in by_family])
        mv = rng.choice(by_family[family])
        p = apply_cut_move(d, p, mv)
        log.append(mv)
    return p, log
