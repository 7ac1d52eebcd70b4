"""Command-line interface.  Every verb prints one JSON document on stdout
(``fuzz`` prints JSON lines); diagnostics go to stderr.

Exit codes: 0 success, 1 a violated property or a verdict differing from
``--expect``, 2 malformed input, 3 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import budget
from . import exactnum as qn
from .dd import canonical_generators, generators_from_json, generators_to_json
from .errors import GenriError, InputError, ResourceError
from .genpoly import (
    GenPolyhedron, UnionSet, canonical, poly_from_json, poly_to_json, points_from_json, ri_representation,
    union_from_json, union_to_json,
)
from .interiors import InteriorKind, interior_membership, normal_cone
from .nearconvex import classify
from .separation import point_set_separation, properly_separate
from .setmap import THEOREMS, SetMap, epi_formula_check, graph_theorem_check, pl_from_json, setmap_from_json

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

BUDGET_HELP = (f"resource caps as cells=<n>,gens=<n>[,max_dim=<n>]; defaults "
               f"cells={budget.Budget().cells}, gens={budget.Budget().gens}, max_dim={budget.Budget().max_dim}")


# ---------------------------------------------------------------- input helpers

def _read_json(path: str) -> object:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None


def _load_set(path: str) -> UnionSet:
    """A union, or a single generalized polyhedron taken as a one-piece union."""
    d = _read_json(path)
    if isinstance(d, dict) and "pieces" in d:
        return union_from_json(d)
    return UnionSet.single(poly_from_json(d))


def _load_poly(path: str) -> GenPolyhedron:
    d = _read_json(path)
    if isinstance(d, dict) and "pieces" in d:
        S = union_from_json(d)
        if len(S.pieces) != 1:
            raise InputError("expected a single generalized polyhedron")
        return S.pieces[0]
    return poly_from_json(d)


def _point(text: str, n: int) -> tuple:
    x = qn.parse_point(text)
    qn.check_dim(x, n, "point")
    return x


def _bool(text: str) -> bool:
    t = text.lower()
    if t in ("true", "1", "yes"):
        return True
    if t in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _emit(doc: object) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def _expect(actual: object, expected: object) -> int:
    if expected is None or actual == expected:
        return EXIT_OK
    print(f"expected {expected}, got {actual}", file=sys.stderr)
    return EXIT_FALSE


# ---------------------------------------------------------------- verbs

def cmd_classify(args: argparse.Namespace) -> int:
    S = _load_set(args.file)
    c = classify(S)
    _emit(c.to_json())
    return _expect(c.cls, args.expect)


def cmd_interior(args: argparse.Namespace) -> int:
    S = _load_set(args.file)
    x = _point(args.point, S.dim)
    cert = interior_membership(args.kind, S, x)
    _emit({"kind": args.kind, "point": qn.fmt_vec(x), "member": cert.verdict, "evidence": cert.to_json()})
    return _expect(cert.verdict, args.expect)


def cmd_ri_rep(args: argparse.Namespace) -> int:
    P = _load_poly(args.file)
    _emit(poly_to_json(ri_representation(P)))
    return EXIT_OK


def cmd_normal_cone(args: argparse.Namespace) -> int:
    S = _load_set(args.file)
    x = _point(args.point, S.dim)
    N = normal_cone(S, x)
    _emit({"point": qn.fmt_vec(x), "cone": poly_to_json(N.cone), "subspace": N.is_subspace(),
           "trivial": N.is_trivial()})
    return EXIT_OK


def cmd_separate(args: argparse.Namespace) -> int:
    S2 = _load_set(args.files[-1])
    if args.point is not None:
        if len(args.files) != 1:
            raise InputError("with --point give exactly one set file")
        rep = point_set_separation(_point(args.point, S2.dim), S2, proper=args.proper)
    else:
        if len(args.files) != 2:
            raise InputError("give two set files, or --point and one set file")
        S1 = _load_set(args.files[0])
        rep = properly_separate(S1, S2)
    _emit(rep.to_json())
    answer = rep.properly_separable if args.proper else rep.separable
    return _expect(answer, args.expect)


def _points_or_default(path: str | None, S: UnionSet) -> list:
    if path is not None:
        return list(points_from_json(_read_json(path), S.dim))
    from .harness.generate import member_points, witness_points
    return member_points(S, witness_points(S))


def cmd_graph_check(args: argparse.Namespace) -> int:
    F: SetMap = setmap_from_json(_read_json(args.file))
    pts = _points_or_default(args.points, F.graph)
    rep = graph_theorem_check(args.theorem, F, pts)
    _emit(rep.to_json())
    return EXIT_FALSE if rep.violations else EXIT_OK


def cmd_epi_check(args: argparse.Namespace) -> int:
    f = pl_from_json(_read_json(args.file))
    pts = _points_or_default(args.points, f.epigraph.graph)
    rep = epi_formula_check(f, pts)
    _emit(rep.to_json())
    return EXIT_FALSE if rep.violations else EXIT_OK


def cmd_fuzz(args: argparse.Namespace) -> int:
    from .harness.runner import report_lines, run_suite, suite_exit_code

    names = [args.suite] if args.suite else []
    if args.checks:
        names += [c for c in args.checks.split(",") if c]
    if not names:
        raise InputError("give --suite or --checks")
    reports = run_suite(names, args.count, args.seed)
    sys.stdout.write(report_lines(reports))
    for r in reports:
        print(f"{r.check}: {r.status} ({r.passes} pass, {r.not_applicable} n/a, {len(r.violations)} violations)",
              file=sys.stderr)
    return suite_exit_code(reports)


def cmd_canonicalize(args: argparse.Namespace) -> int:
    d = _read_json(args.file)
    if isinstance(d, dict) and "graph" in d:
        F = setmap_from_json(d)
        G = UnionSet(F.graph.dim, tuple(canonical(P) for P in F.graph.pieces))
        _emit(SetMap(F.dim_x, F.dim_y, G).to_json())
    elif isinstance(d, dict) and "pieces" in d and "domain" in d:
        _emit(pl_from_json(d).to_json())
    elif isinstance(d, dict) and "pieces" in d:
        S = union_from_json(d)
        _emit(union_to_json(UnionSet(S.dim, tuple(canonical(P) for P in S.pieces))))
    elif isinstance(d, dict) and "points" in d:
        _emit(generators_to_json(canonical_generators(generators_from_json(d))))
    else:
        _emit(poly_to_json(canonical(poly_from_json(d))))
    return EXIT_OK


# ---------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # malformed command lines share exit code 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="genri", description="Exact generalized relative interiors of polyhedral unions.")
    p.add_argument("--budget", default=None, help=BUDGET_HELP)
    # accepted after the verb too; SUPPRESS keeps a value given before it
    common = _Parser(add_help=False)
    common.add_argument("--budget", default=argparse.SUPPRESS, help=BUDGET_HELP)
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", parents=[common], help="convex / nearly_convex / neither")
    s.add_argument("file")
    s.add_argument("--expect", choices=("convex", "nearly_convex", "neither"))
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("interior", parents=[common], help="membership in a generalized interior")
    s.add_argument("--kind", required=True, choices=[k.value for k in InteriorKind])
    s.add_argument("--point", required=True, help="comma-separated rationals, e.g. 1/2,0")
    s.add_argument("--expect", type=_bool)
    s.add_argument("file")
    s.set_defaults(func=cmd_interior)

    s = sub.add_parser("ri-rep", parents=[common], help="relative interior of a generalized polyhedron")
    s.add_argument("file")
    s.set_defaults(func=cmd_ri_rep)

    s = sub.add_parser("normal-cone", parents=[common], help="normal cone at a member point")
    s.add_argument("--point", required=True)
    s.add_argument("file")
    s.set_defaults(func=cmd_normal_cone)

    s = sub.add_parser("separate", parents=[common], help="(proper) separation of two sets or a point and a set")
    s.add_argument("--point", default=None, help="separate this point (first set) from the file's set")
    s.add_argument("--proper", action="store_true", help="answer proper separability")
    s.add_argument("--expect", type=_bool)
    s.add_argument("files", nargs="+")
    s.set_defaults(func=cmd_separate)

    s = sub.add_parser("graph-check", parents=[common], help="graph interior formula at points")
    s.add_argument("--theorem", required=True, choices=THEOREMS)
    s.add_argument("--points", default=None, help="JSON list of graph points (default: witness points)")
    s.add_argument("file")
    s.set_defaults(func=cmd_graph_check)

    s = sub.add_parser("epi-check", parents=[common], help="epigraph interior formula at points")
    s.add_argument("--points", default=None)
    s.add_argument("file")
    s.set_defaults(func=cmd_epi_check)

    s = sub.add_parser("fuzz", parents=[common], help="run property suites")
    s.add_argument("--suite", default=None)
    s.add_argument("--checks", default=None, help="comma-separated check ids")
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_fuzz)

    s = sub.add_parser("canonicalize", parents=[common], help="canonical JSON of a set, map or function")
    s.add_argument("file")
    s.set_defaults(func=cmd_canonicalize)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        caps = budget.parse_budget(args.budget) if args.budget else {}
        with budget.limits(**caps):
            return args.func(args)
    except ResourceError as e:
        print(f"resource budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except InputError as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INPUT
    except GenriError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
