"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical rejection.
JSON goes to stdout with sorted keys; timing goes to stderr so that stdout
is byte-identical across runs.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialization as ser
from .adjacency import WeightTag, classify, validate_nonzero_structure
from .bpolytope import BPolytope, contains, is_b_polytope, vertices
from .errors import BMomentError, InvalidBPolytopeError, MixedWeightsError, SchemaError
from .models.families import family_from_json
from .models.sampling import image_sample
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_MATH = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _emit(obj) -> None:
    sys.stdout.write(ser.dumps(obj) + "\n")


def _load(path):
    try:
        return ser.load_json(path)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno} "
                          f"(char {exc.pos}): {exc.msg}") from None
    except OSError as exc:
        raise _UsageError(f"{path}: {exc.strerror or exc}") from None


def _load_graph(path):
    try:
        return ser.graph_from_json(_load(path))
    except (ValueError, TypeError) as exc:
        raise _UsageError(f"{path}: {exc}") from None


def cmd_classify(args) -> int:
    G = _load_graph(args.file)
    try:
        c = classify(G)
    except MixedWeightsError as exc:
        _emit({"class": "mixed", "error": str(exc), "zero_edges": exc.zero_edges,
               "nonzero_edges": exc.nonzero_edges, "citation": "dichotomy theorem"})
        return EXIT_MATH
    out = ser.class_to_json(c)
    if c.tag is WeightTag.ALL_NONZERO:
        out["structure"] = validate_nonzero_structure(G).to_dict()
    _emit(out)
    return EXIT_OK


def cmd_polytope(args) -> int:
    G = _load_graph(args.graph)
    try:
        hs = ser.halfspaces_from_json(_load(args.halfspaces))
        P = BPolytope(G, hs)
    except SchemaError as exc:
        raise _UsageError(f"{args.halfspaces}: {exc}") from None
    except BMomentError as exc:
        _emit({"valid": False, "error": str(exc)})
        return EXIT_MATH
    except ValueError as exc:
        raise _UsageError(f"{args.halfspaces}: {exc}") from None
    report = is_b_polytope(P, G)
    if args.action == "validate":
        _emit({**report.to_dict(), "citation": "b-polytope conditions"})
        return EXIT_OK if report.passed else EXIT_MATH
    if args.action == "vertices":
        try:
            verts = vertices(P)
        except InvalidBPolytopeError as exc:
            _emit(exc.report.to_dict())
            return EXIT_MATH
        _emit({"valid": True, "vertices": ser.vertices_to_json(verts)})
        return EXIT_OK
    if args.point is None:
        raise _UsageError("contains needs a POINTFILE")
    try:
        p = ser.point_from_json(_load(args.point))
    except (SchemaError, ValueError) as exc:
        raise _UsageError(f"{args.point}: {exc}") from None
    try:
        inside = contains(P, p)
    except BMomentError as exc:
        _emit({"error": str(exc)})
        return EXIT_MATH
    _emit({"contains": inside, "point": ser.point_to_json(p), "valid": report.passed})
    return EXIT_OK


def cmd_moment(args) -> int:
    if args.samples < 1:
        raise _UsageError("samples must be >= 1")
    try:
        fam = family_from_json(_load(args.spec))
    except (ValueError, TypeError) as exc:
        raise _UsageError(f"{args.spec}: {exc}") from None
    s = image_sample(fam, args.samples, args.seed)
    ser.write_csv(s, args.out)
    _emit({**s.summary(), "csv": str(args.out)})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise _UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    if args.samples is not None and args.samples < 1:
        raise _UsageError("samples must be >= 1")
    graph = _load_graph(args.graph) if args.graph else None
    rep = run_suite(args.suite, args.samples, graph)
    _emit(rep.to_dict())
    print(f"{args.suite}: {rep.runtime:.2f}s", file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bmoment", description="b-symplectic moment images and b-polytopes")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify-graph", help="classify a weighted adjacency graph")
    c.add_argument("file", type=Path)
    c.set_defaults(func=cmd_classify)

    q = sub.add_parser("polytope", help="validate / enumerate / query a b-polytope")
    q.add_argument("graph", type=Path)
    q.add_argument("halfspaces", type=Path)
    q.add_argument("action", choices=("validate", "vertices", "contains"))
    q.add_argument("point", type=Path, nargs="?")
    q.set_defaults(func=cmd_polytope)

    m = sub.add_parser("moment", help="sample a model moment image to CSV")
    m.add_argument("spec", type=Path)
    m.add_argument("--samples", type=int, required=True)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--out", type=Path, required=True)
    m.set_defaults(func=cmd_moment)

    v = sub.add_parser("verify", help="run a theorem-verification suite")
    v.add_argument("suite")
    v.add_argument("--graph", type=Path)
    v.add_argument("--samples", type=int)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"bmoment: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
