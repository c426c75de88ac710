"""Fingerprints and covering certificates.

A fingerprint is (component count, linking matrix up to relabeling of components,
multiset of odd writhes). Every entry is unchanged by Reidemeister moves, so different
fingerprints prove two diagrams inequivalent.

If a diagram is mod-m almost classical, its m-fold covering is equivalent to m disjoint
copies of the diagram. ``obstruct`` compares the two fingerprints: a difference is a
certificate that no mod-m almost classical diagram represents the same virtual link.
Equal fingerprints prove nothing.
"""

import json
from dataclasses import dataclass

from vknot.core.errors import CoveringError
from vknot.covering.cover import cover
from vknot.cuts.system import CutSystem
from vknot.gauss.diagram import Diagram, disjoint_union
from vknot.helpers.logger import LOGGER
from vknot.invariants.linking import LinkingMatrix, canonical_linking, linking_matrix, odd_writhe

logger = LOGGER(__name__)


@dataclass(frozen=True, order=True)
class Fingerprint:
    components: int
    linking: LinkingMatrix
    odd_writhes: tuple[int, ...]

    def render(self) -> str:
        lk = json.dumps([list(row) for row in self.linking], separators=(",", ":"))
        ow = json.dumps(list(self.odd_writhes), separators=(",", ":"))
        return f"c={self.components} lk={lk} ow={ow}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Obstructed:
    covering: Fingerprint
    union: Fingerprint


@dataclass(frozen=True)
class Distinct:
    first: Fingerprint
    second: Fingerprint


@dataclass(frozen=True)
class Inconclusive:
    fingerprint: Fingerprint


Verdict = Obstructed | Inconclusive


def fingerprint(d: Diagram) -> Fingerprint:
    return Fingerprint(
        d.component_count,
        canonical_linking(linking_matrix(d)),
        tuple(sorted(odd_writhe(d, i) for i in range(d.component_count))),
    )


def _check_sheets(m: int) -> None:
    if m < 2:
        raise CoveringError(f"certificates need m >= 2, got m={m}")


def obstruct(d: Diagram, p: CutSystem, m: int) -> Verdict:
    _check_sheets(m)
    covering = fingerprint(cover(d, p, m).diagram)
    union = fingerprint(disjoint_union([d] * m))
    if covering != union:
        logger.debug(f"obstructed at m={m}: {covering} vs {union}")
        return Obstructed(covering, union)
    return Inconclusive(covering)


def distinguish(d1: Diagram, p1: CutSystem, d2: Diagram, p2: CutSystem, m: int) -> Distinct | Inconclusive:
    """Different covering fingerprints certify that d1 and d2 are inequivalent."""
    first = fingerprint(cover(d1, p1, m).diagram)
    second = fingerprint(cover(d2, p2, m).diagram)
    if first != second:
        return Distinct(first, second)
    return Inconclusive(first)
