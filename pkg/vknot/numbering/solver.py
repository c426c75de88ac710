from collections import deque
from dataclasses import dataclass
from math import gcd

from vknot.core.errors import NumberingError
from vknot.cuts.system import CutSystem, EMPTY_CUTS
from vknot.gauss.diagram import Diagram
from vknot.numbering.constraints import ArcId, ConstraintGraph, build_constraints, first_arc, last_arc


@dataclass(frozen=True)
class Numbering:
    modulus: int
    values: dict[ArcId, int]

    def __getitem__(self, arc: ArcId) -> int:
        return self.values[arc]

    def satisfies(self, g: ConstraintGraph) -> bool:
        return all(_reduce(self.values[e.source] + e.offset - self.values[e.target], self.modulus) == 0 for e in g.edges)


@dataclass(frozen=True)
class Step:
    source: ArcId
    target: ArcId
    offset: int
    origin: str


@dataclass(frozen=True)
class Unsolvable:
    modulus: int
    witness: tuple[Step, ...]

    @property
    def residual(self) -> int:
        return sum(s.offset for s in self.witness)


def _reduce(value: int, m: int) -> int:
    return value % m if m > 0 else value


@dataclass(frozen=True)
class _Spanning:
    """Integer potentials along a BFS spanning forest."""

    potential: dict[ArcId, int]
    parent: dict[ArcId, tuple[ArcId, int, int] | None]
    non_tree: tuple[int, ...]


def _span(g: ConstraintGraph) -> _Spanning:
    potential: dict[ArcId, int] = {}
    parent: dict[ArcId, tuple[ArcId, int, int] | None] = {}
    tree_edges: set[int] = set()
    for root in sorted(g.nodes):
        if root in potential:
            continue
        potential[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, off, idx in g.adjacency[u]:
                if v in potential:
                    continue
                potential[v] = potential[u] + off
                parent[v] = (u, off, idx)
                tree_edges.add(idx)
                queue.append(v)
    non_tree = tuple(i for i in range(len(g.edges)) if i not in tree_edges)
    return _Spanning(potential, parent, non_tree)


def _path_from_root(sp: _Spanning, g: ConstraintGraph, node: ArcId) -> list[Step]:
    steps: list[Step] = []
    while sp.parent[node] is not None:
        prev, off, idx = sp.parent[node]
        steps.append(Step(prev, node, off, g.edges[idx].origin))
        node = prev
    steps.reverse()
    return steps


def _witness(sp: _Spanning, g: ConstraintGraph, idx: int) -> tuple[Step, ...]:
    """Closed walk root -> source -> target -> root through non-tree edge `idx`."""
    e = g.edges[idx]
    to_source = _path_from_root(sp, g, e.source)
    to_target = _path_from_root(sp, g, e.target)
    back = [Step(s.target, s.source, -s.offset, s.origin) for s in reversed(to_target)]
    return tuple(to_source + [Step(e.source, e.target, e.offset, e.origin)] + back)


def _residual(sp: _Spanning, g: ConstraintGraph, idx: int) -> int:
    e = g.edges[idx]
    return sp.potential[e.source] + e.offset - sp.potential[e.target]


def solve(g: ConstraintGraph, m: int = 0) -> Numbering | Unsolvable:
    """Numbering over Z (m = 0) or Z_m, or a closed walk whose offsets sum to nonzero mod m."""
    if m < 0:
        raise ValueError("modulus must be >= 0")
    sp = _span(g)
    for idx in sp.non_tree:
        if _reduce(_residual(sp, g, idx), m) != 0:
            return Unsolvable(m, _witness(sp, g, idx))
    return Numbering(m, {n: _reduce(v, m) for n, v in sp.potential.items()})


def defect_gcd(g: ConstraintGraph) -> int:
    """gcd of the fundamental-cycle residuals; Z_m-solvable iff m divides it (0: Z-solvable)."""
    sp = _span(g)
    out = 0
    for idx in sp.non_tree:
        out = gcd(out, abs(_residual(sp, g, idx)))
    return out


def check_jump(d: Diagram, p: CutSystem, f: Numbering) -> bool:
    """Endpoint difference of each semi-arc equals its mark balance; loops balance to zero."""
    m = f.modulus
    for gap in d.semi_arcs():
        balance = sum(p.on(gap))
        if d.is_free_loop(gap.component):
            if _reduce(balance, m) != 0:
                return False
            continue
        jump = f[last_arc(d, p, gap)] - f[first_arc(gap)]
        if _reduce(jump - balance, m) != 0:
            return False
    return True


def numberable(d: Diagram, p: CutSystem = EMPTY_CUTS, m: int = 0) -> bool:
    return isinstance(solve(build_constraints(d, p), m), Numbering)


def numberable_moduli(d: Diagram, p: CutSystem = EMPTY_CUTS, up_to: int = 12) -> list[int]:
    g = defect_gcd(build_constraints(d, p))
    return [m for m in range(2, up_to + 1) if g % m == 0]


def checkerboard_colorable(d: Diagram) -> bool:
    """Mod 2 numberable with no cut marks."""
    return numberable(d, EMPTY_CUTS, 2)


def require_solution(g: ConstraintGraph, f: Numbering) -> None:
    if not f.satisfies(g):
        raise NumberingError("numbering does not solve the constraint graph")
