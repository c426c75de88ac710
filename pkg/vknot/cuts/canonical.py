from vknot.cuts.system import COHERENT, INCOHERENT, EMPTY_CUTS, CutSystem
from vknot.gauss.diagram import Diagram, SemiArcId
from vknot.numbering.constraints import ArcId, build_constraints
from vknot.numbering.solver import Numbering, solve


def is_valid(d: Diagram, p: CutSystem) -> bool:
    """A cut system is a set of marks admitting an integer numbering."""
    return isinstance(solve(build_constraints(d, p), 0), Numbering)


def _assemble(d: Diagram, starts: dict[SemiArcId, list[int]], ends: dict[SemiArcId, list[int]]) -> CutSystem:
    gaps = {}
    for gap in d.semi_arcs():
        seq = starts.get(gap, []) + ends.get(gap, [])
        if seq:
            gaps[gap] = seq
    return CutSystem.from_gaps(gaps)


def canonical_cut_system(d: Diagram) -> CutSystem:
    """Two marks per crossing; the numbering is 0 except on the unit segments next to crossings.

    positive crossing: coherent at the end of over-in, incoherent at the start of under-out
    negative crossing: coherent at the end of under-in, incoherent at the start of over-out
    """
    starts: dict[SemiArcId, list[int]] = {}
    ends: dict[SemiArcId, list[int]] = {}
    for cid in d.crossing_ids:
        over, under = d.over(cid), d.under(cid)
        if d.sign(cid) > 0:
            ends.setdefault(d.in_gap(over), []).append(COHERENT)
            starts.setdefault(d.out_gap(under), []).append(INCOHERENT)
        else:
            ends.setdefault(d.in_gap(under), []).append(COHERENT)
            starts.setdefault(d.out_gap(over), []).append(INCOHERENT)
    return _assemble(d, starts, ends)


def lifted_cut_system(d: Diagram, m: int) -> CutSystem | None:
    """Cut system with 0 or m equally oriented marks per semi-arc, for mod-m numberable diagrams.

    A mod-m numbering g of the bare diagram is lifted crossing by crossing (over-in gets
    its residue in [0, m)); the two lifted ends of a semi-arc then differ by a multiple
    of m, which the marks absorb. None when no mod-m numbering exists.
    """
    if m < 1:
        raise ValueError("lifted_cut_system needs m >= 1")
    f = solve(build_constraints(d, EMPTY_CUTS), m)
    if not isinstance(f, Numbering):
        return None

    start_value: dict[SemiArcId, int] = {}
    end_value: dict[SemiArcId, int] = {}
    for cid in d.crossing_ids:
        s = d.sign(cid)
        over, under = d.over(cid), d.under(cid)
        i = f[ArcId(d.in_gap(over), 0)]
        end_value[d.in_gap(over)] = i
        end_value[d.in_gap(under)] = i - s
        start_value[d.out_gap(over)] = i - s
        start_value[d.out_gap(under)] = i

    gaps = {}
    for gap in d.semi_arcs():
        if d.is_free_loop(gap.component):
            continue
        jump = end_value[gap] - start_value[gap]
        if jump:
            gaps[gap] = [COHERENT if jump > 0 else INCOHERENT] * abs(jump)
    return CutSystem.from_gaps(gaps)
