"""Command-line interface: ``rdplattice <command> [options]``.

Exit codes: 0 success, 1 usage error, 2 parse error (type string, graph file,
certificate), 3 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from pathlib import Path

from .adegraph import BUNDLED, GraphFormatError, bundled_graph, load_graph, search_configurations
from .core import TypeStringError, det, gram_sum, parse_type
from .obstruct import (
    ENRIQUES_RANK,
    CertificateError,
    even_embedding_obstruction,
    load_certificate,
    odd_embedding_obstruction,
    square_value,
    verify_embedding,
)
from .padic import INF, invariant_profile
from .pipeline import InconsistencyError, classify_all, enumerate_candidates

SCHEMA_PREFIX = "rdplattice"
EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INCONSISTENT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _sign(e: int) -> str:
    return "+1" if e > 0 else "-1"


def _emit(out, doc: dict | None, lines: list[str], as_json: bool) -> None:
    if as_json:
        out.write(json.dumps(doc, indent=2, sort_keys=False) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")


def cmd_enumerate(args, out) -> int:
    if args.max_rank < 1 or args.max_summands < 1:
        raise UsageError("--max-rank and --max-summands must be at least 1")
    cands = enumerate_candidates(args.max_summands, args.max_rank)
    rows = [
        {
            "type": str(c.type),
            "rank": c.rank,
            "summands": c.summands,
            "abs_det": abs(det(gram_sum(c.type))),
            "k_squared": c.k_squared,
        }
        for c in cands
    ]
    doc = {"schema": f"{SCHEMA_PREFIX}.candidates/1", "count": len(rows), "candidates": rows}
    lines = [f"{r['type']:<14} rank={r['rank']} |det|={r['abs_det']}" for r in rows]
    lines.append(f"{len(rows)} candidates")
    _emit(out, doc, lines, args.json)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    report = classify_all()
    doc = report.as_dict()
    lines = []
    for c in doc["candidates"]:
        detail = "" if c["detail"] is None else f" {c['detail']}"
        status = f" {c['realization']}" if c["realization"] else ""
        lines.append(f"{c['type']:<14} {c['verdict']:<8} {c['class']:<20} {c['reason']}{detail}{status}")
    lines.append(report.summary_line())
    _emit(out, doc, lines, args.json)
    return EXIT_OK


def cmd_invariants(args, out) -> int:
    t = parse_type(args.type)
    g = gram_sum(t)
    d = det(g)
    prof = invariant_profile(g)
    doc = {
        "schema": f"{SCHEMA_PREFIX}.invariants/1",
        "type": str(t),
        "rank": t.rank,
        "det": d,
        "discriminant_class": prof.discriminant,
        "k_squared": ENRIQUES_RANK - t.rank if t.rank < ENRIQUES_RANK else None,
        "square_value": square_value(t) if t.rank < ENRIQUES_RANK else None,
        "epsilon": [{"place": str(p), "epsilon": e} for p, e in prof.epsilons],
    }
    lines = [f"type: {t}", f"rank: {t.rank}", f"det: {d}", f"disc class: {prof.discriminant}"]
    if t.rank < ENRIQUES_RANK:
        lines.append(f"K^2: {doc['k_squared']}")
        lines.append(f"|det|*K^2: {doc['square_value']}")
    for p, e in prof.epsilons:
        lines.append(f"p={'inf' if p == INF else p}: eps = {_sign(e)}")
    _emit(out, doc, lines, args.json)
    return EXIT_OK


def cmd_check(args, out) -> int:
    t = parse_type(args.type)
    target = args.target
    if target == "auto":
        target = "even19" if t.rank == ENRIQUES_RANK else "odd"
    if t.rank > ENRIQUES_RANK:
        raise UsageError(f"{t} has rank {t.rank} > 9")
    if target == "even19" and t.rank != ENRIQUES_RANK:
        raise UsageError(f"target even19 needs rank 9; {t} has rank {t.rank}")
    if target == "odd" and t.rank == ENRIQUES_RANK:
        raise UsageError(f"target odd needs rank < 9; {t} has rank 9")
    p = even_embedding_obstruction(t) if target == "even19" else odd_embedding_obstruction(t)
    status = "NOT_OBSTRUCTED" if p is None else "OBSTRUCTED"
    doc = {
        "schema": f"{SCHEMA_PREFIX}.check/1",
        "type": str(t),
        "target": target,
        "status": status,
        "witness": p,
    }
    _emit(out, doc, [status if p is None else f"OBSTRUCTED(p={p})"], args.json)
    return EXIT_OK


def _resolve_graph(source: str):
    # bundled names win; "./S1" reaches a file of that name
    if source in BUNDLED:
        return bundled_graph(source)
    try:
        return load_graph(source)
    except OSError as exc:
        raise GraphFormatError(f"cannot read graph {source!r}: {exc.strerror or exc}") from exc


def cmd_ade_search(args, out) -> int:
    g = _resolve_graph(args.graph)
    if not 1 <= args.size <= len(g):
        raise UsageError(f"--size must be between 1 and {len(g)}")
    if args.with_subsets:
        confs = search_configurations(g, args.size, with_subsets=True)
        types = sorted({c.type for c in confs}, key=str)
        doc = {
            "schema": f"{SCHEMA_PREFIX}.ade-search/1",
            "graph": g.name,
            "size": args.size,
            "types": [str(t) for t in types],
            "configurations": [{"type": str(c.type), "subset": list(c.subset)} for c in confs],
        }
        lines = [f"{c.type}: {' '.join(c.subset)}" for c in confs]
    else:
        types = search_configurations(g, args.size)
        doc = {
            "schema": f"{SCHEMA_PREFIX}.ade-search/1",
            "graph": g.name,
            "size": args.size,
            "types": [str(t) for t in types],
        }
        lines = [str(t) for t in types]
    lines.append(f"{len(types)} types")
    _emit(out, doc, lines, args.json)
    return EXIT_OK


def _resolve_certificate(source: str):
    bundled = {"e7_extended", "e6_extended"}
    try:
        if source in bundled:
            return load_certificate(resources.files("rdplattice.data") / f"{source}.json")
        return load_certificate(Path(source))
    except OSError as exc:
        raise CertificateError(f"cannot read certificate {source!r}: {exc.strerror or exc}") from exc


def cmd_verify(args, out) -> int:
    cert = _resolve_certificate(args.certificate)
    bad = verify_embedding(cert)
    doc = {
        "schema": f"{SCHEMA_PREFIX}.verify/1",
        "ambient": str(cert.ambient),
        "verified": not bad,
        "mismatches": [
            {"left": m.left, "right": m.right, "expected": m.expected, "actual": m.actual} for m in bad
        ],
    }
    lines = ["VERIFIED"] if not bad else [
        f"MISMATCH {m.left}.{m.right}: expected {m.expected}, got {m.actual}" for m in bad
    ]
    _emit(out, doc, lines, args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a machine-readable JSON document")
    parser = _Parser(prog="rdplattice", parents=[common],
                     description="ADE singularity types on Gorenstein Q-homology projective planes")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("enumerate", parents=[common], help="list candidate ADE types")
    p.add_argument("--max-rank", type=int, default=9)
    p.add_argument("--max-summands", type=int, default=4)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", parents=[common], help="run the full classification")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("invariants", parents=[common], help="local invariants of one type")
    p.add_argument("type")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("check", parents=[common], help="embedding obstruction for one type")
    p.add_argument("type")
    p.add_argument("--target", choices=["auto", "even19", "odd"], default="auto")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ade-search", parents=[common], help="ADE configurations in a curve graph")
    p.add_argument("graph", help=f"bundled name ({', '.join(BUNDLED)}) or path to a graph file")
    p.add_argument("--size", type=int, default=9)
    p.add_argument("--with-subsets", action="store_true")
    p.set_defaults(func=cmd_ade_search)

    p = sub.add_parser("verify", parents=[common], help="check an embedding certificate")
    p.add_argument("certificate", help="bundled name (e7_extended, e6_extended) or path")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    args.json = getattr(args, "json", False)
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (TypeStringError, GraphFormatError, CertificateError) as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except InconsistencyError as exc:
        err.write(f"internal inconsistency: {exc}\n")
        return EXIT_INCONSISTENT


def run() -> None:
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        sys.stdout = open(os.devnull, "w")
        code = EXIT_OK
    sys.exit(code)


if __name__ == "__main__":
    run()
