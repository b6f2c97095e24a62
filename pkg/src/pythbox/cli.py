"""Command-line front end.

Every subcommand is a thin adapter over the library: it parses bounds,
calls one operation and streams records (JSON lines or CSV) to stdout.
Diagnostics and timings go to stderr so stdout is reproducible.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from typing import IO, Any

from . import __version__
from .boxes import (
    PythagoreanBox,
    Result1Witness,
    box_from_result2,
    decompose_result1,
    decompose_wyt,
    enumerate_result2_params,
    pythagorean_box,
    relation_holds,
    search_min_t_one_primitive_pair,
    search_min_t_two_primitive_pairs,
    verify_result3,
)
from .descent import SquarePair, verify_lemma1
from .errors import DomainError
from .intmath import MAX_EDGE
from .quadruples import brute_force_quadruples, enumerate_quadruples, params_for
from .reports import SearchReport
from .triples import enumerate_primitive_triples

Record = dict[str, Any]


# --- records ---


def box_record(box: PythagoreanBox, **provenance: Any) -> Record:
    return {
        "kind": "box",
        "x": box.x,
        "y": box.y,
        "z": box.z,
        "t": box.t,
        "s2": box.s2,
        "u2": box.u2,
        "w2": box.w2,
        "s": box.s,
        "u": box.u,
        "w": box.w,
        **provenance,
    }


def witness_record(wt: Result1Witness, **provenance: Any) -> Record:
    return {
        "kind": "witness",
        "M1": wt.M1,
        "N1": wt.N1,
        "M2": wt.M2,
        "N2": wt.N2,
        "delta": wt.delta,
        "relation_holds": relation_holds(wt),
        **provenance,
    }


def _flatten(prefix: str, obj: Any) -> Record:
    if isinstance(obj, PythagoreanBox):
        rec = box_record(obj)
        del rec["kind"]
    elif isinstance(obj, SquarePair):
        rec = {"r": obj.r, "v": obj.v}
    else:
        return {}
    return {f"{prefix}_{k}": v for k, v in rec.items()}


def report_record(rep: SearchReport) -> Record:
    rec: Record = {
        "kind": "report",
        "name": rep.name,
        "bound": rep.bound,
        "bound_semantics": rep.bound_semantics,
        "count": rep.count,
        "status": "found" if rep.count else "none <= bound",
    }
    rec.update(_flatten("exemplar", rep.exemplar))
    for key, value in rep.details.items():
        if isinstance(value, (int, str, bool)):
            rec[key] = value
    return rec


def write_records(records: Iterable[Record], fmt: str, out: IO[str]) -> None:
    if fmt == "jsonl":
        for rec in records:
            out.write(json.dumps(rec, separators=(", ", ": ")) + "\n")
        return
    writer = None
    kind = None
    for rec in records:
        if rec["kind"] != kind or writer is None:
            kind = rec["kind"]
            writer = csv.DictWriter(out, fieldnames=list(rec), lineterminator="\n")
            writer.writeheader()
        writer.writerow({k: ("" if v is None else v) for k, v in rec.items()})


# --- subcommands ---


@contextmanager
def _mapper(jobs: int):
    if jobs <= 1:
        yield map
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield pool.map


def _report_tail(rep: SearchReport, err: IO[str]) -> Iterator[Record]:
    err.write(f"{rep.name}: {rep.count} match(es), bound {rep.bound}, {rep.elapsed:.3f}s\n")
    yield report_record(rep)


def cmd_triples(args, err) -> Iterator[Record]:
    for p, tr in enumerate_primitive_triples(args.max_c):
        yield {"kind": "triple", "a": tr.a, "b": tr.b, "c": tr.c, "M": p.M, "N": p.N}


def cmd_quadruples(args, err) -> Iterator[Record]:
    if args.oracle:
        for q in brute_force_quadruples(args.max_t):
            yield {"kind": "quadruple", "x": q.x, "y": q.y, "z": q.z, "t": q.t, "source": "oracle"}
        return
    for q in enumerate_quadruples(args.max_t):
        p = params_for(q.x, q.y, q.z, q.t)
        yield {
            "kind": "quadruple", "x": q.x, "y": q.y, "z": q.z, "t": q.t,
            "source": "parametric", "l": p.l, "m": p.m, "n": p.n,
        }


def cmd_result2(args, err) -> Iterator[Record]:
    branch = None if args.branch == "both" else args.branch
    for p in enumerate_result2_params(args.max_t, branch):
        yield box_record(
            box_from_result2(p), source="result2", branch=p.branch,
            M1=p.M1, N1=p.N1, N2=p.N2, M2=p.M2,
        )


def cmd_search_min_t(args, err) -> Iterator[Record]:
    if args.pairs == 1:
        rep = search_min_t_one_primitive_pair(args.max_t)
    else:
        with _mapper(args.jobs) as mapper:
            rep = search_min_t_two_primitive_pairs(args.max_t, mapper)
    source = f"search_pairs_{args.pairs}"
    for box in rep.matches:
        yield box_record(box, source=source)
    if "witness" in rep.details:
        ex = rep.exemplar
        yield witness_record(rep.details["witness"], source=source, x=ex.x, y=ex.y, z=ex.z)
    yield from _report_tail(rep, err)


def cmd_verify_result3(args, err) -> Iterator[Record]:
    with _mapper(args.jobs) as mapper:
        rep = verify_result3(args.bound, mapper)
    for box in rep.matches:
        yield box_record(box, source="result3_counterexample")
    yield from _report_tail(rep, err)


def cmd_verify_lemma1(args, err) -> Iterator[Record]:
    with _mapper(args.jobs) as mapper:
        rep = verify_lemma1(args.bound, mapper)
    for pair in rep.matches:
        yield {"kind": "pair", "r": pair.r, "v": pair.v}
    yield from _report_tail(rep, err)


def cmd_decompose_wyt(args, err) -> Iterator[Record]:
    d = decompose_wyt(args.w, args.y, args.t)
    yield {
        "kind": "witness", "w": args.w, "y": args.y, "t": args.t,
        "delta": d.delta, "M2": d.M2, "N2": d.N2, "source": "wyt",
    }


def cmd_decompose_result1(args, err) -> Iterator[Record]:
    box = pythagorean_box(args.x, args.y, args.z)
    wt = decompose_result1(box)
    yield witness_record(wt, source="result1", x=box.x, y=box.y, z=box.z, t=box.t)


# --- argument parsing ---


def _bound(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value > MAX_EDGE:
        raise argparse.ArgumentTypeError(f"{value} exceeds the overflow-safe bound {MAX_EDGE}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for scans")

    parser = argparse.ArgumentParser(
        prog="pythbox", description="Pythagorean boxes with primitive faces."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triples", parents=[common], help="primitive Pythagorean triples")
    p.add_argument("--max-c", type=_bound, required=True)
    p.set_defaults(func=cmd_triples)

    p = sub.add_parser("quadruples", parents=[common], help="solutions of x²+y²+z²=t²")
    p.add_argument("--max-t", type=_bound, required=True)
    p.add_argument("--oracle", action="store_true", help="use the brute-force scan")
    p.set_defaults(func=cmd_quadruples)

    boxes = sub.add_parser("boxes", help="box generators and searches")
    bsub = boxes.add_subparsers(dest="action", required=True)
    p = bsub.add_parser("result2", parents=[common], help="boxes from the primitive-face generator")
    p.add_argument("--max-t", type=_bound, required=True)
    p.add_argument("--branch", choices=("both", "even", "odd"), default="both")
    p.set_defaults(func=cmd_result2)
    p = bsub.add_parser("search-min-t", parents=[common], help="minimal-t searches")
    p.add_argument("--max-t", type=_bound, required=True)
    p.add_argument("--pairs", type=int, choices=(1, 2), default=1)
    p.set_defaults(func=cmd_search_min_t)

    verify = sub.add_parser("verify", help="exhaustive verifiers")
    vsub = verify.add_subparsers(dest="action", required=True)
    p = vsub.add_parser("result3", parents=[common], help="no square-base box with a primitive face")
    p.add_argument("--bound", type=_bound, required=True)
    p.set_defaults(func=cmd_verify_result3)
    p = vsub.add_parser("lemma1", parents=[common], help="no r, v with r²±v² both squares")
    p.add_argument("--bound", type=_bound, required=True)
    p.set_defaults(func=cmd_verify_lemma1)

    dec = sub.add_parser("decompose", help="parameter decompositions")
    dsub = dec.add_subparsers(dest="action", required=True)
    p = dsub.add_parser("wyt", parents=[common], help="split (w, y, t) as delta times primitive")
    for name in ("w", "y", "t"):
        p.add_argument(f"--{name}", type=_bound, required=True)
    p.set_defaults(func=cmd_decompose_wyt)
    p = dsub.add_parser("result1", parents=[common], help="witness for a two-primitive-face box")
    for name in ("x", "y", "z"):
        p.add_argument(f"--{name}", type=_bound, required=True)
    p.set_defaults(func=cmd_decompose_result1)
    return parser


def run(argv: list[str] | None = None, stdout: IO[str] | None = None,
        stderr: IO[str] | None = None) -> int:
    """Run the CLI; returns 0 on success, 1 on domain errors, 2 on usage errors."""
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs < 1:
        err.write("pythbox: error: --jobs must be >= 1\n")
        return 2
    try:
        # Materialise first so a late error never leaves partial output.
        records = list(args.func(args, err))
    except DomainError as exc:
        err.write(f"pythbox: domain error: {exc}\n")
        return 1
    write_records(records, args.format, out)
    return 0


def main() -> None:
    sys.exit(run())
