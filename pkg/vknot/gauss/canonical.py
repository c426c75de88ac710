"""Canonical form of a Gauss code under relabeling, component order and rotation.

Components are placed one at a time. A placement is (component, starting passage);
its encoding is the tuple of (label, role, sign) tokens where labels are handed out in
order of first appearance. The canonical form is the lexicographically least sequence
of encodings. The search keeps every partial placement that ties for the least prefix,
merging placements whose futures coincide (same placed set, same labels on crossings
that still have a passage to place).
"""

from dataclasses import dataclass

from vknot.core.config_manager import Config
from vknot.gauss.codec import serialize
from vknot.gauss.diagram import Diagram, Passage, Role
from vknot.helpers.logger import LOGGER

_ROLE_CODE = {Role.OVER: 0, Role.UNDER: 1}

Token = tuple[int, int, int]


@dataclass(frozen=True, order=True)
class CanonicalKey:
    key: bytes

    def hex(self) -> str:
        return self.key.hex()


@dataclass(frozen=True)
class _Placement:
    used: frozenset[int]
    labels: tuple[tuple[int, int], ...]
    order: tuple[tuple[int, int], ...]


def _encode(d: Diagram, comp: tuple[Passage, ...], start: int, labels: dict[int, int]) -> tuple[tuple[Token, ...], dict[int, int]]:
    fresh: dict[int, int] = {}
    next_label = len(labels) + 1
    tokens: list[Token] = []
    n = len(comp)
    for k in range(n):
        p = comp[(start + k) % n]
        label = labels.get(p.crossing_id) or fresh.get(p.crossing_id)
        if label is None:
            label = fresh[p.crossing_id] = next_label
            next_label += 1
        tokens.append((label, _ROLE_CODE[p.role], 0 if d.sign(p.crossing_id) > 0 else 1))
    return tuple(tokens), fresh


def _open_labels(d: Diagram, used: frozenset[int], labels: dict[int, int]) -> frozenset[tuple[int, int]]:
    out = []
    for cid, label in labels.items():
        loc = d.locations[cid]
        if any(ref.component not in used for ref in loc.values()):
            out.append((cid, label))
    return frozenset(out)


def canonical_order(d: Diagram) -> tuple[tuple[tuple[int, int], ...], dict[int, int]]:
    """Winning (component, start) placements and the crossing relabeling they induce."""
    n = d.component_count
    if n > Config.MAX_CANONICAL_COMPONENTS:
        LOGGER(__name__).warning(f"canonicalizing {n} components; the search is exponential in this")

    states = [_Placement(frozenset(), (), ())]
    for _ in range(n):
        best: tuple[Token, ...] | None = None
        merged: dict[tuple, _Placement] = {}
        for st in states:
            labels = dict(st.labels)
            free_loop_done = False
            for ci in range(n):
                if ci in st.used:
                    continue
                comp = d.components[ci]
                if not comp:
                    # free loops are interchangeable, try the first unused one only
                    if free_loop_done:
                        continue
                    free_loop_done = True
                for start in range(max(1, len(comp))):
                    enc, fresh = _encode(d, comp, start, labels)
                    if best is not None and enc > best:
                        continue
                    if best is None or enc < best:
                        best = enc
                        merged = {}
                    new_labels = {**labels, **fresh}
                    used = st.used | {ci}
                    key = (used, _open_labels(d, used, new_labels))
                    if key not in merged:
                        merged[key] = _Placement(used, tuple(sorted(new_labels.items())), st.order + ((ci, start),))
        states = list(merged.values())
        LOGGER(__name__).debug(f"canonical search: {len(states)} tied placements")

    winner = min(states, key=lambda s: s.order) if states else _Placement(frozenset(), (), ())
    return winner.order, dict(winner.labels)


def canonicalize(d: Diagram) -> Diagram:
    order, labels = canonical_order(d)
    components: list[tuple[Passage, ...]] = []
    for ci, start in order:
        comp = d.components[ci]
        rotated = comp[start:] + comp[:start]
        components.append(tuple(Passage(labels[p.crossing_id], p.role) for p in rotated))
    return Diagram.from_parts(components, {labels[c]: s for c, s in d.signs})


def canonical_key(d: Diagram) -> CanonicalKey:
    return CanonicalKey(serialize(canonicalize(d)).encode("utf-8"))


def isomorphic(d1: Diagram, d2: Diagram) -> bool:
    return canonical_key(d1) == canonical_key(d2)
