from fastapi import APIRouter, HTTPException

from Api.schemas.diagrams import CoverRequest, CutsysRequest, DiagramRequest, IsoRequest, NumberRequest, ObstructRequest
from vknot.core.errors import VknotError
from vknot.covering.cover import cover as build_cover
from vknot.covering.cover import sheet_trace
from vknot.cuts.canonical import canonical_cut_system, is_valid, lifted_cut_system
from vknot.cuts.system import CutSystem, balance
from vknot.gauss.canonical import canonical_key
from vknot.gauss.codec import parse_diagram, serialize
from vknot.gauss.diagram import Diagram
from vknot.gauss.validate import validate as find_violations
from vknot.helpers.logger import LOGGER
from vknot.invariants.certificate import obstruct as covering_certificate
from vknot.numbering.constraints import build_constraints
from vknot.numbering.solver import defect_gcd, solve
from vknot.schemas.reports import (
    CoverReport,
    CutSystemReport,
    InvariantsReport,
    IsoReport,
    NumberingReport,
    ValidationReport,
    VerdictReport,
)

router = APIRouter(prefix="/diagrams", tags=["diagrams"])

logger = LOGGER(__name__)


def _parse(text: str) -> tuple[Diagram, CutSystem]:
    try:
        return parse_diagram(text)
    except VknotError as e:
        logger.warning(f"rejected diagram: {e}")
        raise HTTPException(status_code=400, detail=str(e))


def _cuts_or_canonical(d: Diagram, p: CutSystem) -> CutSystem:
    return p if not p.is_empty() else canonical_cut_system(d)


@router.post("/validate", response_model=ValidationReport)
def validate(body: DiagramRequest):
    d, _ = _parse(body.gauss)
    return ValidationReport.build(find_violations(d))


@router.post("/number", response_model=NumberingReport)
def number(body: NumberRequest):
    d, p = _parse(body.gauss)
    g = build_constraints(d, p)
    return NumberingReport.build(solve(g, body.mod), defect_gcd(g))


@router.post("/cutsys", response_model=CutSystemReport)
def cutsys(body: CutsysRequest):
    d, p = _parse(body.gauss)
    if body.mode == "canonical":
        p = canonical_cut_system(d)
    elif body.mode == "lift":
        if body.m is None:
            raise HTTPException(status_code=400, detail="mode 'lift' needs m")
        lifted = lifted_cut_system(d, body.m)
        if lifted is None:
            raise HTTPException(status_code=400, detail=f"diagram has no mod {body.m} numbering")
        p = lifted
    b = balance(p)
    return CutSystemReport(diagram=serialize(d, p), valid=is_valid(d, p), coherent=b.coherent, incoherent=b.incoherent)


@router.post("/cover", response_model=CoverReport)
def cover(body: CoverRequest):
    d, p = _parse(body.gauss)
    try:
        s = build_cover(d, _cuts_or_canonical(d, p), body.m)
    except VknotError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return CoverReport(
        diagram=serialize(s.diagram),
        components=s.diagram.component_count,
        crossings=s.diagram.crossing_count,
        trace=sheet_trace(s) if body.trace else None,
    )


@router.post("/invariants", response_model=InvariantsReport)
def invariants(body: DiagramRequest):
    d, _ = _parse(body.gauss)
    return InvariantsReport.build(d)


@router.post("/obstruct", response_model=VerdictReport)
def obstruct(body: ObstructRequest):
    d, p = _parse(body.gauss)
    try:
        verdict = covering_certificate(d, _cuts_or_canonical(d, p), body.m)
    except VknotError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return VerdictReport.build(verdict, body.m)


@router.post("/iso", response_model=IsoReport)
def iso(body: IsoRequest):
    d1, _ = _parse(body.first)
    d2, _ = _parse(body.second)
    k1, k2 = canonical_key(d1), canonical_key(d2)
    return IsoReport(isomorphic=k1 == k2, keys=[k1.hex(), k2.hex()])
