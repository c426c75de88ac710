"""Signed Gauss codes of virtual link diagrams.

Only classical crossings are stored. Virtual crossings are invisible at this level:
diagrams related by detour moves have the same Gauss code, so equality of codes (up
to relabeling and rotation, see ``vknot.gauss.canonical``) is strong equivalence.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence


class Role(str, Enum):
    OVER = "O"
    UNDER = "U"


@dataclass(frozen=True, order=True)
class Passage:
    crossing_id: int
    role: Role

    def __str__(self) -> str:
        return f"{self.role.value}{self.crossing_id}"


@dataclass(frozen=True, order=True)
class SemiArcId:
    """The gap following passage ``gap`` of ``component`` (gap 0 for a free loop)."""

    component: int
    gap: int

    def __str__(self) -> str:
        return f"c{self.component}.g{self.gap}"


@dataclass(frozen=True)
class PassageRef:
    component: int
    position: int


@dataclass(frozen=True)
class Diagram:
    components: tuple[tuple[Passage, ...], ...] = ()
    signs: tuple[tuple[int, int], ...] = field(default=())

    @classmethod
    def of(cls, components: Iterable[Iterable[tuple[str, int]]], signs: Mapping[int, int]) -> "Diagram":
        """Build from ``[[("O", 1), ("U", 1)], ...]`` and ``{1: +1}``."""
        comps = tuple(tuple(Passage(int(cid), Role(role)) for role, cid in comp) for comp in components)
        return cls(comps, tuple(sorted((int(k), int(v)) for k, v in signs.items())))

    @classmethod
    def from_parts(cls, components: Sequence[Sequence[Passage]], signs: Mapping[int, int]) -> "Diagram":
        return cls(tuple(tuple(c) for c in components), tuple(sorted(signs.items())))

    @cached_property
    def sign_map(self) -> dict[int, int]:
        return dict(self.signs)

    def sign(self, crossing_id: int) -> int:
        return self.sign_map[crossing_id]

    @cached_property
    def locations(self) -> dict[int, dict[Role, PassageRef]]:
        out: dict[int, dict[Role, PassageRef]] = {}
        for i, comp in enumerate(self.components):
            for j, p in enumerate(comp):
                out.setdefault(p.crossing_id, {})[p.role] = PassageRef(i, j)
        return out

    def over(self, crossing_id: int) -> PassageRef:
        return self.locations[crossing_id][Role.OVER]

    def under(self, crossing_id: int) -> PassageRef:
        return self.locations[crossing_id][Role.UNDER]

    @property
    def crossing_ids(self) -> list[int]:
        return sorted(self.sign_map)

    @property
    def crossing_count(self) -> int:
        return len(self.signs)

    @property
    def passage_count(self) -> int:
        return sum(len(c) for c in self.components)

    @property
    def component_count(self) -> int:
        return len(self.components)

    def is_free_loop(self, component: int) -> bool:
        return len(self.components[component]) == 0

    def gap_count(self, component: int) -> int:
        return max(1, len(self.components[component]))

    def semi_arcs(self) -> Iterator[SemiArcId]:
        for i in range(len(self.components)):
            for j in range(self.gap_count(i)):
                yield SemiArcId(i, j)

    def in_gap(self, ref: PassageRef) -> SemiArcId:
        """Semi-arc ending at the passage."""
        n = len(self.components[ref.component])
        return SemiArcId(ref.component, (ref.position - 1) % n)

    def out_gap(self, ref: PassageRef) -> SemiArcId:
        """Semi-arc starting at the passage."""
        return SemiArcId(ref.component, ref.position)

    def next_crossing_id(self) -> int:
        return max(self.sign_map, default=0) + 1

    def __str__(self) -> str:
        from vknot.gauss.codec import serialize

        return serialize(self)


EMPTY = Diagram()


def relabel(d: Diagram, mapping: Mapping[int, int]) -> Diagram:
    comps = tuple(tuple(Passage(mapping[p.crossing_id], p.role) for p in comp) for comp in d.components)
    return Diagram(comps, tuple(sorted((mapping[c], s) for c, s in d.signs)))


def disjoint_union(ds: Sequence[Diagram]) -> Diagram:
    """Concatenate components; crossing ids of the k-th input are shifted past all earlier ones."""
    components: list[tuple[Passage, ...]] = []
    signs: dict[int, int] = {}
    next_id = 1
    for d in ds:
        mapping = {}
        for cid in d.crossing_ids:
            mapping[cid] = next_id
            next_id += 1
        moved = relabel(d, mapping)
        components.extend(moved.components)
        signs.update(moved.sign_map)
    return Diagram.from_parts(components, signs)
