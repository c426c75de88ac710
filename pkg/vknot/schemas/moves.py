from pydantic import BaseModel, Field

from vknot.moves.reidemeister import MoveFamily, RMoveSpec


class MoveRecord(BaseModel):
    family: MoveFamily
    site: list[int]
    variant: str = ""

    @classmethod
    def of(cls, mv: RMoveSpec) -> "MoveRecord":
        return cls(family=mv.family, site=list(mv.site), variant=mv.variant)

    def to_spec(self) -> RMoveSpec:
        return RMoveSpec(MoveFamily(self.family), tuple(self.site), self.variant)


class MoveLog(BaseModel):
    diagram: str
    log: list[MoveRecord] = Field(default_factory=list)
