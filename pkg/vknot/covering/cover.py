"""The m-fold cyclic covering of a diagram with a cut system.

Each component is walked once per sheet orbit. The walk carries a sheet index k in
Z_m. A passage of crossing c met at sheet k becomes a passage of crossing (c, k),
and a cut mark of orientation eps moves the walk to sheet k - eps. Crossing (c, k)
of the covering gets id ``(c - 1) * m + k + 1`` and the sign of c.
"""

from dataclasses import dataclass
from math import gcd

from vknot.core.errors import CoveringError, CutSystemError, NumberingError
from vknot.cuts.canonical import is_valid
from vknot.cuts.system import CutSystem, locate
from vknot.gauss.diagram import Diagram, Passage, SemiArcId
from vknot.helpers.logger import LOGGER
from vknot.numbering.constraints import build_constraints, first_arc
from vknot.numbering.solver import Numbering

logger = LOGGER(__name__)


@dataclass(frozen=True)
class ShiftVector:
    t: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.t)


@dataclass(frozen=True)
class ComponentOrigin:
    component: int
    sheet: int
    laps: int


@dataclass(frozen=True)
class ArcOrigin:
    semi_arc: SemiArcId
    sheet: int


@dataclass(frozen=True)
class SheetedDiagram:
    diagram: Diagram
    crossing_origin: dict[int, tuple[int, int]]
    component_origin: tuple[ComponentOrigin, ...]
    arc_origin: dict[SemiArcId, ArcOrigin]
    m: int
    base: Diagram
    cuts: CutSystem


def _require_valid(d: Diagram, p: CutSystem) -> None:
    locate(d, p)
    if not is_valid(d, p):
        raise CutSystemError("cut system admits no integer numbering")


def component_shifts(d: Diagram, p: CutSystem) -> ShiftVector:
    _require_valid(d, p)
    t = [0] * d.component_count
    for mark in p:
        t[mark.at.component] -= mark.eps
    return ShiftVector(tuple(t))


def covering_id(crossing_id: int, sheet: int, m: int) -> int:
    return (crossing_id - 1) * m + sheet + 1


def cover(d: Diagram, p: CutSystem, m: int) -> SheetedDiagram:
    if m < 1:
        raise CoveringError(f"a covering needs at least one sheet, got m={m}")
    _require_valid(d, p)

    comps: list[tuple[Passage, ...]] = []
    origins: list[ComponentOrigin] = []
    arc_origin: dict[SemiArcId, ArcOrigin] = {}
    crossing_origin: dict[int, tuple[int, int]] = {}
    signs: dict[int, int] = {}

    for i, base_comp in enumerate(d.components):
        gaps = d.gap_count(i)
        consumed: set[int] = set()
        for start in range(m):
            if start in consumed:
                continue
            new_index = len(comps)
            walk: list[Passage] = []
            k = start
            laps = 0
            while True:
                consumed.add(k)
                laps += 1
                for j in range(gaps):
                    if base_comp:
                        cid = base_comp[j].crossing_id
                        new_id = covering_id(cid, k, m)
                        walk.append(Passage(new_id, base_comp[j].role))
                        crossing_origin[new_id] = (cid, k)
                        signs[new_id] = d.sign(cid)
                        arc_origin[SemiArcId(new_index, len(walk) - 1)] = ArcOrigin(SemiArcId(i, j), k)
                    elif laps == 1:
                        arc_origin[SemiArcId(new_index, 0)] = ArcOrigin(SemiArcId(i, 0), k)
                    for eps in p.on(SemiArcId(i, j)):
                        k = (k - eps) % m
                if k == start:
                    break
            comps.append(tuple(walk))
            origins.append(ComponentOrigin(i, start, laps))
            logger.debug(f"component {i}: sheet orbit from {start} closes after {laps} laps")

    out = Diagram.from_parts(comps, signs)
    logger.debug(f"cover m={m}: {d.crossing_count} -> {out.crossing_count} crossings, {len(comps)} components")
    return SheetedDiagram(out, crossing_origin, tuple(origins), arc_origin, m, d, p)


def expected_component_count(t: ShiftVector, m: int) -> int:
    return sum(gcd(m, ti) for ti in t.t)


def induced_numbering(s: SheetedDiagram, f: Numbering) -> Numbering:
    """Mod-m numbering of the covering: base value plus sheet on every covering semi-arc."""
    if f.modulus != 0:
        raise NumberingError("induced_numbering needs an integer numbering of the base")
    g = build_constraints(s.base, s.cuts)
    if any(n not in f.values for n in g.nodes) or not f.satisfies(g):
        raise NumberingError("numbering does not solve the base diagram with its cut system")
    values = {
        first_arc(gap): (f[first_arc(origin.semi_arc)] + origin.sheet) % s.m
        for gap, origin in s.arc_origin.items()
    }
    return Numbering(s.m, values)


def sheet_trace(s: SheetedDiagram) -> dict[str, list[int]]:
    """The `{new_id: [orig_id, sheet]}` sidecar document."""
    return {str(new_id): [orig, sheet] for new_id, (orig, sheet) in sorted(s.crossing_origin.items())}
