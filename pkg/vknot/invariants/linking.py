from vknot.core.config_manager import Config
from vknot.gauss.diagram import Diagram
from vknot.helpers.logger import LOGGER

logger = LOGGER(__name__)

LinkingMatrix = tuple[tuple[int, ...], ...]


def writhe(d: Diagram) -> int:
    return sum(s for _, s in d.signs)


def linking_matrix(d: Diagram) -> LinkingMatrix:
    """lk[i][j]: sum of signs of crossings where component i passes over component j."""
    n = d.component_count
    lk = [[0] * n for _ in range(n)]
    for cid in d.crossing_ids:
        i, j = d.over(cid).component, d.under(cid).component
        if i != j:
            lk[i][j] += d.sign(cid)
    return tuple(tuple(row) for row in lk)


def self_crossings(d: Diagram, component: int) -> list[int]:
    return [cid for cid in d.crossing_ids if d.over(cid).component == component == d.under(cid).component]


def odd_writhe(d: Diagram, component: int) -> int:
    """Signs of self-crossings whose passages enclose an odd number of self-crossing passages."""
    own = set(self_crossings(d, component))
    total = 0
    for cid in own:
        a, b = sorted((d.over(cid).position, d.under(cid).position))
        between = sum(1 for p in d.components[component][a + 1:b] if p.crossing_id in own)
        if between % 2:
            total += d.sign(cid)
    return total


def _twin_classes(lk: LinkingMatrix) -> list[int]:
    """Representative of each vertex's twin class; swapping twins is an automorphism."""
    n = len(lk)
    rep = list(range(n))
    for v in range(n):
        for u in range(v):
            if rep[u] != u:
                continue
            if lk[u][v] == lk[v][u] and all(
                lk[u][w] == lk[v][w] and lk[w][u] == lk[w][v] for w in range(n) if w not in (u, v)
            ):
                rep[v] = u
                break
    return rep


def canonical_order(lk: LinkingMatrix) -> tuple[int, ...]:
    """Vertex order minimizing the stagewise serialization of the matrix.

    Stage t appends, for the t-th placed vertex v, the entries lk[v][w] and then lk[w][v]
    over the already placed w in placement order. All stage blocks have fixed length, so
    keeping only prefixes with the least block at each stage finds the lexicographic
    minimum over all orders.
    """
    n = len(lk)
    if n > Config.MAX_CANONICAL_COMPONENTS:
        logger.warning(f"canonicalizing a {n}x{n} linking matrix, this may be slow")
    rep = _twin_classes(lk)
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(n):
        best: tuple[int, ...] | None = None
        nxt: list[tuple[int, ...]] = []
        for prefix in frontier:
            used = set(prefix)
            tried: set[int] = set()
            for v in range(n):
                if v in used or rep[v] in tried:
                    continue
                tried.add(rep[v])
                block = tuple(lk[v][w] for w in prefix) + tuple(lk[w][v] for w in prefix)
                if best is None or block < best:
                    best, nxt = block, [prefix + (v,)]
                elif block == best:
                    nxt.append(prefix + (v,))
        frontier = nxt
        logger.debug(f"linking canonicalization: {len(frontier)} tied prefixes")
    return frontier[0] if frontier else ()


def canonical_linking(lk: LinkingMatrix) -> LinkingMatrix:
    order = canonical_order(lk)
    return tuple(tuple(lk[i][j] for j in order) for i in order)
