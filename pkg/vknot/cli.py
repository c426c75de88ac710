"""Command-line front end.

Exit status: 0 affirmative, 1 negative decision, 2 input error. Results go to standard
output, logs and error messages to standard error.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Callable

from tabulate import tabulate

from vknot.core.errors import PairingError, SignConflictError, VknotError
from vknot.covering.cover import cover, sheet_trace
from vknot.cuts.canonical import canonical_cut_system, is_valid, lifted_cut_system
from vknot.cuts.system import CutSystem, balance
from vknot.gauss.canonical import canonical_key
from vknot.gauss.codec import read_gauss_file, serialize
from vknot.gauss.diagram import Diagram
from vknot.gauss.generate import Hopf, RandomDiagram, Torus2q, VirtualTrefoil, generate
from vknot.gauss.validate import validate
from vknot.helpers.logger import LOGGER
from vknot.invariants.certificate import Distinct, Obstructed, distinguish, obstruct
from vknot.moves.reidemeister import RMoveSpec, apply_moves
from vknot.moves.walk import random_walk
from vknot.numbering.constraints import build_constraints
from vknot.numbering.solver import Numbering, defect_gcd, numberable_moduli, solve
from vknot.schemas.moves import MoveLog, MoveRecord
from vknot.schemas.reports import (
    CoverReport,
    CutSystemReport,
    InvariantsReport,
    IsoReport,
    ModuliReport,
    NumberingReport,
    ValidationReport,
    VerdictReport,
    ViolationItem,
)

logger = LOGGER(__name__)

OK, NO, INPUT_ERROR = 0, 1, 2


class _InputError(Exception):
    """Bad flag combinations noticed after parsing."""


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _write(path: str, text: str) -> None:
    Path(path).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    logger.info(f"wrote {path}")


def _cuts_or_canonical(d: Diagram, p: CutSystem) -> CutSystem:
    return p if not p.is_empty() else canonical_cut_system(d)


# validate / invariants run per file, possibly in a process pool


def _validate_one(path: str, as_json: bool) -> tuple[int, str]:
    try:
        d, _ = read_gauss_file(path)
        report = ValidationReport.build(validate(d))
    except (PairingError, SignConflictError) as e:
        report = ValidationReport(valid=False, violations=[ViolationItem(kind="pairing" if isinstance(e, PairingError) else "sign-conflict", crossing_id=e.crossing_id, detail=str(e))])
    except (VknotError, OSError) as e:
        return INPUT_ERROR, f"{path}: {e}"
    status = OK if report.valid else NO
    if as_json:
        return status, report.model_dump_json(indent=2)
    if report.valid:
        return status, f"{path}: ok"
    lines = [f"{path}: {len(report.violations)} violation(s)"]
    lines += [f"  {v.kind}({v.crossing_id}): {v.detail}" for v in report.violations]
    return status, "\n".join(lines)


def _invariants_one(path: str, as_json: bool) -> tuple[int, str]:
    try:
        d, _ = read_gauss_file(path)
    except (VknotError, OSError) as e:
        return INPUT_ERROR, f"{path}: {e}"
    report = InvariantsReport.build(d)
    if as_json:
        return OK, report.model_dump_json(indent=2)
    rows = [
        ["components", report.components],
        ["writhe", report.writhe],
        ["odd writhe", " ".join(str(w) for w in report.odd_writhe)],
        ["fingerprint", report.fingerprint],
    ]
    out = [f"{path}", tabulate(rows, tablefmt="plain")]
    if report.components > 1:
        headers = [f"c{j}" for j in range(report.components)]
        out.append(tabulate([[f"c{i}", *row] for i, row in enumerate(report.linking)], headers=["lk", *headers]))
    return OK, "\n".join(out)


def _fan_out(worker: Callable[[str], tuple[int, str]], paths: list[str], jobs: int) -> int:
    if jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, paths))
    else:
        results = [worker(p) for p in paths]
    # errors come back as data, custom exceptions do not survive pickling
    for status, text in results:
        if status == INPUT_ERROR:
            print(f"error: {text}", file=sys.stderr)
        else:
            _emit(text)
    return max(status for status, _ in results)


def cmd_validate(args) -> int:
    return _fan_out(partial(_validate_one, as_json=args.json), args.files, args.jobs)


def cmd_invariants(args) -> int:
    return _fan_out(partial(_invariants_one, as_json=args.json), args.files, args.jobs)


def cmd_number(args) -> int:
    d, p = read_gauss_file(args.file)
    g = build_constraints(d, p)
    defect = defect_gcd(g)

    if args.moduli is not None:
        report = ModuliReport(defect_gcd=defect, up_to=args.moduli, moduli=numberable_moduli(d, p, args.moduli))
        if args.json:
            _emit(report.model_dump_json(indent=2))
        else:
            _emit(f"defect_gcd: {defect}")
            _emit("numberable moduli: " + (" ".join(str(m) for m in report.moduli) or "none"))
        return OK if report.moduli else NO

    if args.mod < 0:
        raise _InputError("--mod must be >= 0")
    result = solve(g, args.mod)
    report = NumberingReport.build(result, defect)
    if args.json:
        _emit(report.model_dump_json(indent=2))
    elif isinstance(result, Numbering):
        _emit(tabulate(sorted(report.values.items()), headers=["arc", "f"]))
        _emit(f"defect_gcd: {defect}")
    else:
        _emit(f"no numbering mod {args.mod}; witness cycle with residual {report.residual}:")
        _emit(tabulate([[s.source, s.target, s.offset, s.origin] for s in report.witness], headers=["from", "to", "offset", "origin"]))
        _emit(f"defect_gcd: {defect}")
    return OK if report.solvable else NO


def cmd_cutsys(args) -> int:
    d, p = read_gauss_file(args.file)
    if args.check:
        valid = is_valid(d, p)
        b = balance(p)
        report = CutSystemReport(diagram=serialize(d, p), valid=valid, coherent=b.coherent, incoherent=b.incoherent)
        if args.json:
            _emit(report.model_dump_json(indent=2))
        else:
            _emit(f"{'valid' if valid else 'invalid'} cut system: {b.coherent} coherent, {b.incoherent} incoherent")
        return OK if valid else NO

    if args.lift is not None:
        if args.lift < 1:
            raise _InputError("--lift needs M >= 1")
        lifted = lifted_cut_system(d, args.lift)
        if lifted is None:
            print(f"diagram has no mod {args.lift} numbering", file=sys.stderr)
            return NO
        p = lifted
    else:
        p = canonical_cut_system(d)

    text = serialize(d, p)
    if args.output:
        _write(args.output, text)
    else:
        _emit(text)
    return OK


def cmd_cover(args) -> int:
    if args.m < 1:
        raise _InputError("-m must be >= 1")
    trace_path = None
    if args.trace is not None:
        trace_path = args.trace or (f"{Path(args.output).with_suffix('')}.sheets.json" if args.output else None)
        if not trace_path and not args.json:
            raise _InputError("--trace needs a path or -o OUT")

    d, p = read_gauss_file(args.file)
    s = cover(d, _cuts_or_canonical(d, p), args.m)
    text = serialize(s.diagram)
    trace = sheet_trace(s)

    if trace_path:
        _write(trace_path, json.dumps(trace, indent=2))
    if args.output:
        _write(args.output, text)
    if args.json:
        report = CoverReport(
            diagram=text,
            components=s.diagram.component_count,
            crossings=s.diagram.crossing_count,
            trace=trace if args.trace is not None else None,
        )
        _emit(report.model_dump_json(indent=2))
    elif not args.output:
        _emit(text)
    return OK


def cmd_obstruct(args) -> int:
    if args.m < 2:
        raise _InputError("-m must be >= 2")
    d, p = read_gauss_file(args.file)
    verdict = obstruct(d, _cuts_or_canonical(d, p), args.m)
    report = VerdictReport.build(verdict, args.m)
    if args.json:
        _emit(report.model_dump_json(indent=2))
    elif isinstance(verdict, Obstructed):
        _emit(f"Obstructed(m={args.m})")
        _emit(tabulate([["covering", report.fingerprints[0]], ["union", report.fingerprints[1]]], tablefmt="plain"))
    else:
        _emit(f"Inconclusive(m={args.m}): {report.fingerprints[0]}")
    return OK if isinstance(verdict, Obstructed) else NO


def cmd_distinguish(args) -> int:
    if args.m < 1:
        raise _InputError("-m must be >= 1")
    d1, p1 = read_gauss_file(args.file1)
    d2, p2 = read_gauss_file(args.file2)
    verdict = distinguish(d1, _cuts_or_canonical(d1, p1), d2, _cuts_or_canonical(d2, p2), args.m)
    report = VerdictReport.build(verdict, args.m)
    if args.json:
        _emit(report.model_dump_json(indent=2))
    elif isinstance(verdict, Distinct):
        _emit(f"Distinct(m={args.m})")
        _emit(tabulate([[args.file1, report.fingerprints[0]], [args.file2, report.fingerprints[1]]], tablefmt="plain"))
    else:
        _emit(f"Inconclusive(m={args.m}): {report.fingerprints[0]}")
    return OK if isinstance(verdict, Distinct) else NO


def cmd_iso(args) -> int:
    d1, _ = read_gauss_file(args.file1)
    d2, _ = read_gauss_file(args.file2)
    k1, k2 = canonical_key(d1), canonical_key(d2)
    report = IsoReport(isomorphic=k1 == k2, keys=[k1.hex(), k2.hex()])
    if args.json:
        _emit(report.model_dump_json(indent=2))
    else:
        _emit("isomorphic" if report.isomorphic else "not isomorphic")
    return OK if report.isomorphic else NO


def _load_specs(raw: str) -> list[RMoveSpec]:
    """A JSON spec, a list of them, or a path to a file holding either."""
    text = Path(raw).read_text(encoding="utf-8") if not raw.lstrip().startswith(("{", "[")) else raw
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise _InputError(f"--spec is not JSON: {e}") from e
    if isinstance(data, dict):
        data = [data]
    try:
        return [MoveRecord.model_validate(item).to_spec() for item in data]
    except Exception as e:
        raise _InputError(f"bad move spec: {e}") from e


def cmd_move(args) -> int:
    d, _ = read_gauss_file(args.file)
    if args.spec is not None:
        log = _load_specs(args.spec)
        out = apply_moves(d, log)
    else:
        if args.random < 0:
            raise _InputError("--random must be >= 0")
        out, log = random_walk(d, args.random, args.seed)

    text = serialize(out)
    records = [MoveRecord.of(mv) for mv in log]
    if args.log:
        _write(args.log, json.dumps([r.model_dump(mode="json") for r in records], indent=2))
    if args.output:
        _write(args.output, text)
    if args.json:
        _emit(MoveLog(diagram=text, log=records).model_dump_json(indent=2))
    elif not args.output:
        _emit(text)
    return OK


def cmd_gen(args) -> int:
    match args.kind:
        case "torus2q":
            d = generate(Torus2q(args.q, args.sign))
        case "vtrefoil":
            d = generate(VirtualTrefoil())
        case "hopf":
            d = generate(Hopf(args.sign))
        case "random":
            d = generate(RandomDiagram(args.n, args.components, args.seed))
    text = serialize(d)
    if args.output:
        _write(args.output, text)
    else:
        _emit(text)
    return OK


def _sign(value: str) -> int:
    v = int(value)
    if v not in (1, -1):
        raise argparse.ArgumentTypeError("sign must be 1 or -1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vknot", description="Alexander numberings, cut systems and cyclic coverings of virtual link diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check diagram invariants")
    p.add_argument("files", nargs="+")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("number", help="solve for an Alexander numbering")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--mod", type=int, help="0 for integers, M for Z_M")
    group.add_argument("--moduli", type=int, metavar="K", help="list the moduli 2..K that admit a numbering")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_number)

    p = sub.add_parser("cutsys", help="emit or check cut systems")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--canonical", action="store_true")
    group.add_argument("--check", action="store_true")
    group.add_argument("--lift", type=int, metavar="M")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cutsys)

    p = sub.add_parser("cover", help="m-fold cyclic covering diagram")
    p.add_argument("file")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--trace", nargs="?", const="", default=None, metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("invariants", help="writhe, linking matrix, odd writhe, fingerprint")
    p.add_argument("files", nargs="+")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("obstruct", help="covering certificate against mod m almost classicality")
    p.add_argument("file")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("distinguish", help="compare covering fingerprints of two diagrams")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("iso", help="canonical-key equality")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("move", help="apply Reidemeister moves")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--random", type=int, metavar="N")
    group.add_argument("--spec", metavar="JSON")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.add_argument("--log", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("gen", help="generate diagrams")
    p.add_argument("-o", "--output")
    kinds = p.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("torus2q")
    k.add_argument("q", type=int)
    k.add_argument("--sign", type=_sign, default=1)
    kinds.add_parser("vtrefoil")
    k = kinds.add_parser("hopf")
    k.add_argument("--sign", type=_sign, default=1)
    k = kinds.add_parser("random")
    k.add_argument("n", type=int)
    k.add_argument("components", type=int)
    k.add_argument("seed", type=int)
    p.set_defaults(func=cmd_gen)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (VknotError, ValueError, OSError, _InputError) as e:
        logger.warning(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR
