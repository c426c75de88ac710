from pydantic import BaseModel

from vknot.gauss.diagram import Diagram
from vknot.gauss.validate import Violation
from vknot.invariants.certificate import Distinct, Fingerprint, Inconclusive, Obstructed, fingerprint
from vknot.invariants.linking import linking_matrix, odd_writhe, writhe
from vknot.numbering.solver import Numbering, Unsolvable


class ViolationItem(BaseModel):
    kind: str
    crossing_id: int
    detail: str


class ValidationReport(BaseModel):
    valid: bool
    violations: list[ViolationItem]

    @classmethod
    def build(cls, violations: list[Violation]) -> "ValidationReport":
        items = [ViolationItem(kind=v.kind, crossing_id=v.crossing_id, detail=v.detail) for v in violations]
        return cls(valid=not items, violations=items)


class WitnessStep(BaseModel):
    source: str
    target: str
    offset: int
    origin: str


class NumberingReport(BaseModel):
    modulus: int
    solvable: bool
    defect_gcd: int
    values: dict[str, int] | None = None
    witness: list[WitnessStep] | None = None
    residual: int | None = None

    @classmethod
    def build(cls, result: Numbering | Unsolvable, defect: int) -> "NumberingReport":
        if isinstance(result, Numbering):
            values = {str(arc): v for arc, v in sorted(result.values.items())}
            return cls(modulus=result.modulus, solvable=True, defect_gcd=defect, values=values)
        steps = [WitnessStep(source=str(s.source), target=str(s.target), offset=s.offset, origin=s.origin) for s in result.witness]
        return cls(modulus=result.modulus, solvable=False, defect_gcd=defect, witness=steps, residual=result.residual)


class ModuliReport(BaseModel):
    defect_gcd: int
    up_to: int
    moduli: list[int]


class InvariantsReport(BaseModel):
    components: int
    writhe: int
    linking: list[list[int]]
    odd_writhe: list[int]
    fingerprint: str

    @classmethod
    def build(cls, d: Diagram) -> "InvariantsReport":
        return cls(
            components=d.component_count,
            writhe=writhe(d),
            linking=[list(row) for row in linking_matrix(d)],
            odd_writhe=[odd_writhe(d, i) for i in range(d.component_count)],
            fingerprint=fingerprint(d).render(),
        )


class VerdictReport(BaseModel):
    verdict: str
    m: int
    fingerprints: list[str]

    @classmethod
    def build(cls, verdict: Obstructed | Distinct | Inconclusive, m: int) -> "VerdictReport":
        match verdict:
            case Obstructed(covering=a, union=b) | Distinct(first=a, second=b):
                prints: list[Fingerprint] = [a, b]
            case Inconclusive(fingerprint=a):
                prints = [a]
        return cls(verdict=type(verdict).__name__, m=m, fingerprints=[f.render() for f in prints])


class CoverReport(BaseModel):
    diagram: str
    components: int
    crossings: int
    trace: dict[str, list[int]] | None = None


class IsoReport(BaseModel):
    isomorphic: bool
    keys: list[str]


class CutSystemReport(BaseModel):
    diagram: str
    valid: bool
    coherent: int
    incoherent: int
