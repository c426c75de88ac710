"""Alexander-numbering conditions as a difference-constraint graph.

Nodes are the pieces of semi-arcs left after cutting at the marks (``ArcId``). An edge
``(u, v, k)`` demands ``f(v) - f(u) = k``. At a crossing of sign s, with arc-ends
over-in (oi), over-out (oo), under-in (ui) and under-out (uo):

    f(oo) = f(oi) - s        the over strand drops by one at a positive crossing
    f(uo) = f(ui) + s        the under strand rises by one
    f(ui) = f(oi) - s

so the two incoming ends differ by one and the outgoing ends carry the incoming
values swapped. A coherent mark adds ``+1`` in the direction of travel, an incoherent
one ``-1``. Virtual crossings impose nothing and are not represented.
"""

from dataclasses import dataclass, field
from functools import cached_property

from vknot.cuts.system import CutSystem, locate
from vknot.gauss.diagram import Diagram, PassageRef, SemiArcId


@dataclass(frozen=True, order=True)
class ArcId:
    semi_arc: SemiArcId
    segment: int

    def __str__(self) -> str:
        return f"{self.semi_arc}.s{self.segment}"


@dataclass(frozen=True)
class Edge:
    source: ArcId
    target: ArcId
    offset: int
    origin: str = field(default="", compare=False)


@dataclass(frozen=True)
class ConstraintGraph:
    nodes: tuple[ArcId, ...]
    edges: tuple[Edge, ...]

    @cached_property
    def adjacency(self) -> dict[ArcId, list[tuple[ArcId, int, int]]]:
        """node -> [(neighbour, offset seen from node, edge index)]."""
        adj: dict[ArcId, list[tuple[ArcId, int, int]]] = {n: [] for n in self.nodes}
        for idx, e in enumerate(self.edges):
            adj[e.source].append((e.target, e.offset, idx))
            adj[e.target].append((e.source, -e.offset, idx))
        return adj

    def negated(self) -> "ConstraintGraph":
        """Mirror convention: every offset negated."""
        return ConstraintGraph(self.nodes, tuple(Edge(e.source, e.target, -e.offset, e.origin) for e in self.edges))


def segment_count(d: Diagram, p: CutSystem, gap: SemiArcId) -> int:
    k = len(p.on(gap))
    if d.is_free_loop(gap.component):
        return max(1, k)
    return k + 1


def first_arc(gap: SemiArcId) -> ArcId:
    return ArcId(gap, 0)


def last_arc(d: Diagram, p: CutSystem, gap: SemiArcId) -> ArcId:
    return ArcId(gap, segment_count(d, p, gap) - 1)


def _arc_in(d: Diagram, p: CutSystem, ref: PassageRef) -> ArcId:
    return last_arc(d, p, d.in_gap(ref))


def _arc_out(d: Diagram, ref: PassageRef) -> ArcId:
    return first_arc(d.out_gap(ref))


def build_constraints(d: Diagram, p: CutSystem) -> ConstraintGraph:
    locate(d, p)
    nodes = [ArcId(gap, s) for gap in d.semi_arcs() for s in range(segment_count(d, p, gap))]
    edges: list[Edge] = []

    for cid in d.crossing_ids:
        s = d.sign(cid)
        over, under = d.over(cid), d.under(cid)
        oi, oo = _arc_in(d, p, over), _arc_out(d, over)
        ui, uo = _arc_in(d, p, under), _arc_out(d, under)
        origin = f"crossing {cid}"
        edges.append(Edge(oi, oo, -s, origin))
        edges.append(Edge(ui, uo, s, origin))
        edges.append(Edge(oi, ui, -s, origin))

    for gap in p.gaps():
        marks = p.on(gap)
        loop = d.is_free_loop(gap.component)
        for k, eps in enumerate(marks):
            target = (k + 1) % len(marks) if loop else k + 1
            edges.append(Edge(ArcId(gap, k), ArcId(gap, target), eps, f"cut mark {gap}#{k}"))

    return ConstraintGraph(tuple(nodes), tuple(edges))
