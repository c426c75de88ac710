"""The `.gauss` text format.

    # comment to end of line
    O1+ U2+ !+      one component per line, tokens separated by whitespace
    U1+ O2+         passage = O|U, crossing id, sign
    ()              free loop; `() !+ !-` is a free loop carrying marks

A cut mark (`!+` coherent, `!-` incoherent) sits in the gap after the passage written
before it. Marks written before the first passage of a line belong to the last gap
and come after, along the orientation, the marks written after the last passage.
"""

import re

from vknot.core.errors import GaussSyntaxError, PairingError, SignConflictError
from vknot.cuts.system import COHERENT, INCOHERENT, EMPTY_CUTS, CutSystem, locate
from vknot.gauss.diagram import Diagram, Passage, Role, SemiArcId

_PASSAGE = re.compile(r"^([OU])(\d+)([+-])$")
_MARK = re.compile(r"^!([+-])$")
_FREE_LOOP = "()"


def _sign_char(sign: int) -> str:
    return "+" if sign > 0 else "-"


def parse_diagram(text: str) -> tuple[Diagram, CutSystem]:
    components: list[tuple[Passage, ...]] = []
    signs: dict[int, int] = {}
    seen: dict[int, set[Role]] = {}
    gaps: dict[SemiArcId, list[int]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue

        comp_index = len(components)
        passages: list[Passage] = []
        lead: list[int] = []
        after: list[list[int]] = []
        free_loop = False

        for pos, tok in enumerate(tokens):
            if tok == _FREE_LOOP:
                if pos != 0:
                    raise GaussSyntaxError("'()' must open its line", line=lineno, token=tok)
                free_loop = True
                continue

            mark = _MARK.match(tok)
            if mark:
                eps = COHERENT if mark.group(1) == "+" else INCOHERENT
                (after[-1] if passages else lead).append(eps)
                continue

            m = _PASSAGE.match(tok)
            if not m:
                raise GaussSyntaxError(f"bad token {tok!r}", line=lineno, token=tok)
            if free_loop:
                raise GaussSyntaxError("a free loop line carries no passages", line=lineno, token=tok)

            role, cid, sign = Role(m.group(1)), int(m.group(2)), 1 if m.group(3) == "+" else -1
            if cid <= 0:
                raise GaussSyntaxError("crossing ids are positive integers", line=lineno, token=tok)
            if cid in signs and signs[cid] != sign:
                raise SignConflictError(cid)
            signs[cid] = sign
            roles = seen.setdefault(cid, set())
            if role in roles:
                raise PairingError(cid, f"written twice as {role.value}")
            roles.add(role)
            passages.append(Passage(cid, role))
            after.append([])

        if passages:
            after[-1].extend(lead)
            for j, marks in enumerate(after):
                if marks:
                    gaps[SemiArcId(comp_index, j)] = marks
        elif lead:
            gaps[SemiArcId(comp_index, 0)] = lead
        components.append(tuple(passages))

    for cid, roles in sorted(seen.items()):
        missing = {Role.OVER, Role.UNDER} - roles
        if missing:
            raise PairingError(cid, f"never written as {missing.pop().value}")

    return Diagram.from_parts(components, signs), CutSystem.from_gaps(gaps)


def serialize(d: Diagram, p: CutSystem = EMPTY_CUTS) -> str:
    locate(d, p)
    lines: list[str] = []
    for i, comp in enumerate(d.components):
        tokens: list[str] = []
        if not comp:
            tokens.append(_FREE_LOOP)
            tokens.extend("!+" if e == COHERENT else "!-" for e in p.on(SemiArcId(i, 0)))
        for j, passage in enumerate(comp):
            tokens.append(f"{passage}{_sign_char(d.sign(passage.crossing_id))}")
            tokens.extend("!+" if e == COHERENT else "!-" for e in p.on(SemiArcId(i, j)))
        lines.append(" ".join(tokens))
    return "\n".join(lines)


def read_gauss_file(path: str) -> tuple[Diagram, CutSystem]:
    with open(path, "r", encoding="utf-8") as f:
        return parse_diagram(f.read())
