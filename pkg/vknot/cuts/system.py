from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

from vknot.core.errors import CutSystemError
from vknot.gauss.diagram import Diagram, SemiArcId

COHERENT = 1
INCOHERENT = -1


@dataclass(frozen=True, order=True)
class CutPoint:
    at: SemiArcId
    ordinal: int
    eps: int

    @property
    def coherent(self) -> bool:
        return self.eps == COHERENT

    def token(self) -> str:
        return "!+" if self.eps == COHERENT else "!-"


class Balance(NamedTuple):
    coherent: int
    incoherent: int


@dataclass(frozen=True)
class CutSystem:
    """Oriented cut marks, kept sorted by (semi-arc, ordinal); ordinals are dense per semi-arc."""

    marks: tuple[CutPoint, ...] = ()

    @classmethod
    def from_gaps(cls, gaps: Mapping[SemiArcId, Sequence[int]]) -> "CutSystem":
        marks: list[CutPoint] = []
        for gap in sorted(gaps):
            for k, eps in enumerate(gaps[gap]):
                if eps not in (COHERENT, INCOHERENT):
                    raise CutSystemError(f"cut mark orientation must be +1 or -1, got {eps}")
                marks.append(CutPoint(gap, k, int(eps)))
        return cls(tuple(marks))

    @cached_property
    def by_gap(self) -> dict[SemiArcId, tuple[int, ...]]:
        out: dict[SemiArcId, list[int]] = {}
        for m in self.marks:
            out.setdefault(m.at, []).append(m.eps)
        return {k: tuple(v) for k, v in out.items()}

    def on(self, gap: SemiArcId) -> tuple[int, ...]:
        return self.by_gap.get(gap, ())

    def replace(self, edits: Mapping[SemiArcId, Sequence[int]]) -> "CutSystem":
        gaps: dict[SemiArcId, Sequence[int]] = dict(self.by_gap)
        for gap, seq in edits.items():
            if seq:
                gaps[gap] = tuple(seq)
            else:
                gaps.pop(gap, None)
        return CutSystem.from_gaps(gaps)

    def gaps(self) -> list[SemiArcId]:
        return sorted(self.by_gap)

    def is_empty(self) -> bool:
        return not self.marks

    def __len__(self) -> int:
        return len(self.marks)

    def __iter__(self):
        return iter(self.marks)


EMPTY_CUTS = CutSystem()


def balance(p: CutSystem) -> Balance:
    coherent = sum(1 for m in p.marks if m.eps == COHERENT)
    return Balance(coherent, len(p.marks) - coherent)


def net(eps: Iterable[int]) -> int:
    return sum(eps)


def locate(d: Diagram, p: CutSystem) -> None:
    """Raise CutSystemError if some mark sits in a gap the diagram does not have."""
    for gap in p.by_gap:
        if not (0 <= gap.component < d.component_count) or not (0 <= gap.gap < d.gap_count(gap.component)):
            raise CutSystemError(f"cut mark in nonexistent gap {gap}")
