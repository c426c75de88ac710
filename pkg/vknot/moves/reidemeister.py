"""Generalized Reidemeister moves on signed Gauss codes.

Virtual crossings are not stored, so the four purely virtual moves and the mixed
move are identities here. Detour moves let any two semi-arcs be brought next to each
other, so R2 may be inserted between any two gaps, on one component or on two.

Sites and variants:

    R1insert  (comp, gap)                     "+OU" "+UO" "-OU" "-UO"   sign, passage order
    R1delete  (c,)                            O_c and U_c cyclically adjacent
    R2insert  (comp_a, gap_a, comp_b, gap_b)  "{+|-}{P|A}{1|2}"
    R2delete  (x, y)                          opposite signs, O_x O_y adjacent, U_x U_y adjacent
    R3        (a, b, c)                       a: top over middle, b: top over bottom, c: middle over bottom

R2insert: x gets the given sign and y the opposite one. The strand on gap "1" or "2"
carries O_x O_y; the other gets U_x U_y (P, parallel) or U_y U_x (A, antiparallel).
When both gaps coincide the block of strand a comes first.

R3 needs the pairs {O_a, O_b}, {U_a, O_c}, {U_b, U_c} to be cyclically adjacent.
Reading each pair along its strand gives an order sign, +1 when the strand meets
the crossings in the order written above:

    top     sigma_T = +1 iff O_b follows O_a
    middle  sigma_M = +1 iff O_c follows U_a
    bottom  sigma_B = +1 iff U_c follows U_b

The triangle is planar iff s_b * s_c == sigma_T * sigma_M and s_a * s_c == sigma_T * sigma_B.
The move swaps each pair, which reverses all three order signs, so R3 is its own inverse.
A strand with only two passages can be read either way round.
"""

import re
from dataclasses import dataclass
from enum import Enum
from itertools import product

from vknot.core.errors import InapplicableMoveError
from vknot.gauss.diagram import Diagram, Passage, PassageRef, Role, SemiArcId


class MoveFamily(str, Enum):
    R1_INSERT = "R1insert"
    R1_DELETE = "R1delete"
    R2_INSERT = "R2insert"
    R2_DELETE = "R2delete"
    R3 = "R3"


R1_VARIANTS = ("+OU", "+UO", "-OU", "-UO")
R2_VARIANTS = tuple(f"{s}{k}{w}" for s in "+-" for k in "PA" for w in "12")
_R2_RE = re.compile(r"^([+-])([PA])([12])$")


@dataclass(frozen=True, order=True)
class RMoveSpec:
    family: MoveFamily
    site: tuple[int, ...]
    variant: str = ""

    def __str__(self) -> str:
        site = ",".join(str(x) for x in self.site)
        return f"{self.family.value}({site}){self.variant}"


def _follows(d: Diagram, first: PassageRef, second: PassageRef) -> set[int]:
    """Order signs under which `second` comes right after `first` on one strand."""
    if first.component != second.component:
        return set()
    n = len(d.components[first.component])
    out: set[int] = set()
    if (first.position + 1) % n == second.position:
        out.add(1)
    if (second.position + 1) % n == first.position:
        out.add(-1)
    return out


def _insert(d: Diagram, inserts: dict[SemiArcId, list[Passage]], signs: dict[int, int]) -> Diagram:
    comps: list[list[Passage]] = []
    for i, comp in enumerate(d.components):
        if not comp:
            comps.append(list(inserts.get(SemiArcId(i, 0), [])))
            continue
        new: list[Passage] = []
        for j, passage in enumerate(comp):
            new.append(passage)
            new.extend(inserts.get(SemiArcId(i, j), []))
        comps.append(new)
    return Diagram.from_parts(comps, {**d.sign_map, **signs})


def _remove(d: Diagram, crossing_ids: set[int]) -> Diagram:
    comps = [[p for p in comp if p.crossing_id not in crossing_ids] for comp in d.components]
    return Diagram.from_parts(comps, {c: s for c, s in d.sign_map.items() if c not in crossing_ids})


def _check_gap(d: Diagram, comp: int, gap: int) -> SemiArcId:
    if not (0 <= comp < d.component_count and 0 <= gap < d.gap_count(comp)):
        raise InapplicableMoveError(f"no gap c{comp}.g{gap}")
    return SemiArcId(comp, gap)


def _check_crossings(d: Diagram, ids: tuple[int, ...]) -> None:
    if len(set(ids)) != len(ids) or any(c not in d.sign_map for c in ids):
        raise InapplicableMoveError(f"crossings {ids} are not distinct crossings of the diagram")


# R1


def _r1_insert(d: Diagram, mv: RMoveSpec) -> Diagram:
    if len(mv.site) != 2 or mv.variant not in R1_VARIANTS:
        raise InapplicableMoveError(f"{mv}: expected site (comp, gap) and variant in {R1_VARIANTS}")
    gap = _check_gap(d, *mv.site)
    x = d.next_crossing_id()
    first, second = (Role.OVER, Role.UNDER) if mv.variant[1:] == "OU" else (Role.UNDER, Role.OVER)
    sign = 1 if mv.variant[0] == "+" else -1
    return _insert(d, {gap: [Passage(x, first), Passage(x, second)]}, {x: sign})


def _is_kink(d: Diagram, c: int) -> bool:
    return bool(_follows(d, d.over(c), d.under(c)))


def _r1_delete(d: Diagram, mv: RMoveSpec) -> Diagram:
    if len(mv.site) != 1:
        raise InapplicableMoveError(f"{mv}: expected site (crossing,)")
    _check_crossings(d, mv.site)
    if not _is_kink(d, mv.site[0]):
        raise InapplicableMoveError(f"{mv}: passages are not adjacent")
    return _remove(d, {mv.site[0]})


# R2


def _r2_insert(d: Diagram, mv: RMoveSpec) -> Diagram:
    match = _R2_RE.match(mv.variant)
    if len(mv.site) != 4 or not match:
        raise InapplicableMoveError(f"{mv}: expected site (comp_a, gap_a, comp_b, gap_b) and variant in {R2_VARIANTS}")
    a = _check_gap(d, mv.site[0], mv.site[1])
    b = _check_gap(d, mv.site[2], mv.site[3])
    if b < a:
        raise InapplicableMoveError(f"{mv}: gaps must be given in order")
    sign_char, kind, over_strand = match.groups()
    sign = 1 if sign_char == "+" else -1
    x = d.next_crossing_id()
    y = x + 1
    over = [Passage(x, Role.OVER), Passage(y, Role.OVER)]
    under = [Passage(x, Role.UNDER), Passage(y, Role.UNDER)]
    if kind == "A":
        under.reverse()
    block_a, block_b = (over, under) if over_strand == "1" else (under, over)
    inserts = {a: block_a + block_b} if a == b else {a: block_a, b: block_b}
    return _insert(d, inserts, {x: sign, y: -sign})


def _is_bigon(d: Diagram, x: int, y: int) -> bool:
    return (
        d.sign(x) == -d.sign(y)
        and bool(_follows(d, d.over(x), d.over(y)))
        and bool(_follows(d, d.under(x), d.under(y)))
    )


def _r2_delete(d: Diagram, mv: RMoveSpec) -> Diagram:
    if len(mv.site) != 2:
        raise InapplicableMoveError(f"{mv}: expected site (x, y)")
    _check_crossings(d, mv.site)
    x, y = mv.site
    if not _is_bigon(d, x, y):
        raise InapplicableMoveError(f"{mv}: crossings do not bound a bigon")
    return _remove(d, {x, y})


# R3


def _triangle_orders(d: Diagram, a: int, b: int, c: int) -> tuple[set[int], set[int], set[int]]:
    top = _follows(d, d.over(a), d.over(b))
    middle = _follows(d, d.under(a), d.over(c))
    bottom = _follows(d, d.under(b), d.under(c))
    return top, middle, bottom


def _is_triangle(d: Diagram, a: int, b: int, c: int) -> bool:
    sa, sb, sc = d.sign(a), d.sign(b), d.sign(c)
    for t, m, bo in product(*_triangle_orders(d, a, b, c)):
        if sb * sc == t * m and sa * sc == t * bo:
            return True
    return False


def _swap(comps: list[list[Passage]], first: PassageRef, second: PassageRef) -> None:
    comp = comps[first.component]
    comp[first.position], comp[second.position] = comp[second.position], comp[first.position]


def _r3(d: Diagram, mv: RMoveSpec) -> Diagram:
    if len(mv.site) != 3:
        raise InapplicableMoveError(f"{mv}: expected site (a, b, c)")
    _check_crossings(d, mv.site)
    a, b, c = mv.site
    if not _is_triangle(d, a, b, c):
        raise InapplicableMoveError(f"{mv}: not a planar triangle")
    comps = [list(comp) for comp in d.components]
    _swap(comps, d.over(a), d.over(b))
    _swap(comps, d.under(a), d.over(c))
    _swap(comps, d.under(b), d.under(c))
    return Diagram.from_parts(comps, d.sign_map)


_APPLY = {
    MoveFamily.R1_INSERT: _r1_insert,
    MoveFamily.R1_DELETE: _r1_delete,
    MoveFamily.R2_INSERT: _r2_insert,
    MoveFamily.R2_DELETE: _r2_delete,
    MoveFamily.R3: _r3,
}


def apply_move(d: Diagram, mv: RMoveSpec) -> Diagram:
    return _APPLY[MoveFamily(mv.family)](d, mv)


def apply_moves(d: Diagram, moves: list[RMoveSpec]) -> Diagram:
    for mv in moves:
        d = apply_move(d, mv)
    return d


def _neighbours(d: Diagram, ref: PassageRef) -> list[Passage]:
    comp = d.components[ref.component]
    n = len(comp)
    return [comp[(ref.position - 1) % n], comp[(ref.position + 1) % n]]


def enumerate_sites(d: Diagram, family: MoveFamily) -> list[RMoveSpec]:
    family = MoveFamily(family)
    out: list[RMoveSpec] = []
    gaps = list(d.semi_arcs())

    if family == MoveFamily.R1_INSERT:
        for gap in gaps:
            for variant in R1_VARIANTS:
                out.append(RMoveSpec(family, (gap.component, gap.gap), variant))

    elif family == MoveFamily.R1_DELETE:
        out = [RMoveSpec(family, (c,)) for c in d.crossing_ids if _is_kink(d, c)]

    elif family == MoveFamily.R2_INSERT:
        for i, a in enumerate(gaps):
            for b in gaps[i:]:
                for variant in R2_VARIANTS:
                    out.append(RMoveSpec(family, (a.component, a.gap, b.component, b.gap), variant))

    elif family == MoveFamily.R2_DELETE:
        ids = d.crossing_ids
        for i, x in enumerate(ids):
            for y in ids[i + 1:]:
                if _is_bigon(d, x, y):
                    out.append(RMoveSpec(family, (x, y)))

    elif family == MoveFamily.R3:
        for a in d.crossing_ids:
            for top in _neighbours(d, d.over(a)):
                b = top.crossing_id
                if top.role != Role.OVER or b == a:
                    continue
                for mid in _neighbours(d, d.under(a)):
                    c = mid.crossing_id
                    if mid.role != Role.OVER or c in (a, b):
                        continue
                    if _is_triangle(d, a, b, c):
                        out.append(RMoveSpec(family, (a, b, c)))
        out = sorted(set(out))

    return out
