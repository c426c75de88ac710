from typing import Literal

from pydantic import BaseModel, Field


class DiagramRequest(BaseModel):
    gauss: str


class NumberRequest(DiagramRequest):
    mod: int = Field(default=0, ge=0)


class CutsysRequest(DiagramRequest):
    mode: Literal["canonical", "check", "lift"] = "canonical"
    m: int | None = Field(default=None, ge=1)


class CoverRequest(DiagramRequest):
    m: int = Field(ge=1)
    trace: bool = False


class ObstructRequest(DiagramRequest):
    m: int = Field(ge=2)


class IsoRequest(BaseModel):
    first: str
    second: str
