from collections import Counter
from dataclasses import dataclass

from vknot.gauss.diagram import Diagram, Role


@dataclass(frozen=True, order=True)
class Violation:
    kind: str
    crossing_id: int
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}({self.crossing_id}): {self.detail}"


def validate(d: Diagram) -> list[Violation]:
    """Every broken Diagram invariant, one entry per offending crossing id and kind."""
    out: list[Violation] = []
    counts: Counter[tuple[int, Role]] = Counter()
    for comp in d.components:
        for p in comp:
            counts[(p.crossing_id, p.role)] += 1

    used = sorted({cid for cid, _ in counts})
    signs = d.sign_map

    for cid in used:
        if cid <= 0:
            out.append(Violation("bad-id", cid, "crossing ids must be positive"))
        o, u = counts[(cid, Role.OVER)], counts[(cid, Role.UNDER)]
        if (o, u) != (1, 1):
            out.append(Violation("pairing", cid, f"written {o}x as O and {u}x as U"))
        if cid not in signs:
            out.append(Violation("missing-sign", cid, "no sign recorded"))
        elif signs[cid] not in (1, -1):
            out.append(Violation("bad-sign", cid, f"sign {signs[cid]} is not +1/-1"))

    for cid in sorted(set(signs) - set(used)):
        out.append(Violation("orphan-sign", cid, "sign recorded for an unused crossing"))

    if len(d.signs) != len(signs):
        dupes = [cid for cid, n in Counter(c for c, _ in d.signs).items() if n > 1]
        out.extend(Violation("sign-conflict", cid, "sign recorded twice") for cid in sorted(dupes))
    return sorted(out)


def is_valid_diagram(d: Diagram) -> bool:
    return not validate(d)
