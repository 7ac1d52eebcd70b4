"""Polyhedral set-valued maps, piecewise-linear convex functions, and
pointwise checks of the graph and epigraph interior formulas."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import exactnum as qn
from .cover import covers
from .dd import to_generators
from .errors import EmptySetError, InputError
from .exactnum import EQ, LE, ONE, ZERO, Vec, mpq
from .genpoly import (
    Constraint, GenPolyhedron, UnionSet, affine_hull, closure, embed, find_point, make_flat,
    nonempty, poly_from_json, poly_to_json, project, ri_representation, substitute, union_affine_hull,
    union_from_json, union_to_json, universe,
)
from .interiors import interior_membership, local_tangent_cones
from .nearconvex import NEITHER, classify, is_convex

THEOREMS = ("iri_graph", "sqri_graph", "qri_graph_fwd", "qri_graph_bwd", "qri_int_graph", "qi_graph_bwd")


@dataclass(frozen=True)
class SetMap:
    """A map ``x -> F(x)`` given by its graph; the first ``dim_x``
    coordinates are ``x``."""

    dim_x: int
    dim_y: int
    graph: UnionSet

    def __post_init__(self) -> None:
        if self.dim_x < 0 or self.dim_y < 0 or self.graph.dim != self.dim_x + self.dim_y:
            raise InputError("graph dimension must equal dim_x + dim_y")

    def split(self, z: Sequence[mpq]) -> tuple[Vec, Vec]:
        return tuple(z[:self.dim_x]), tuple(z[self.dim_x:])

    def to_json(self) -> dict:
        return {"dim_x": self.dim_x, "dim_y": self.dim_y, "graph": union_to_json(self.graph)}


def setmap_from_json(d: object) -> SetMap:
    if not isinstance(d, dict) or set(d) != {"dim_x", "dim_y", "graph"}:
        raise InputError("map must be an object with keys dim_x, dim_y, graph")
    for k in ("dim_x", "dim_y"):
        if not isinstance(d[k], int) or isinstance(d[k], bool) or d[k] < 0:
            raise InputError(f"{k} must be a nonnegative integer")
    return SetMap(d["dim_x"], d["dim_y"], union_from_json(d["graph"]))


def domain_of(F: SetMap) -> UnionSet:
    keep = list(range(F.dim_x))
    return UnionSet(F.dim_x, tuple(project(P, keep) for P in F.graph.pieces))


def range_of(F: SetMap) -> UnionSet:
    keep = list(range(F.dim_x, F.dim_x + F.dim_y))
    return UnionSet(F.dim_y, tuple(project(P, keep) for P in F.graph.pieces))


def slice_at(F: SetMap, x: Sequence[object]) -> UnionSet:
    x = qn.vec(x)
    qn.check_dim(x, F.dim_x, "point")
    fixed = dict(enumerate(x))
    return UnionSet(F.dim_y, tuple(substitute(P, fixed) for P in F.graph.pieces))


# ---------------------------------------------------------------- piecewise-linear convex functions

@dataclass(frozen=True)
class PLConvexFunction:
    """``f(x) = max_i (a_i . x + b_i)`` on a convex domain."""

    pieces: tuple[tuple[Vec, mpq], ...]
    domain: GenPolyhedron
    epigraph: SetMap

    @property
    def dim(self) -> int:
        return self.domain.dim

    def value(self, x: Sequence[mpq]) -> mpq:
        return max(qn.dot(a, x) + b for a, b in self.pieces)

    def to_json(self) -> dict:
        return {
            "pieces": [{"a": qn.fmt_vec(a), "b": qn.fmt(b)} for a, b in self.pieces],
            "domain": poly_to_json(self.domain),
        }


def epi_of(pieces: Iterable[tuple[Sequence[object], object]], domain: GenPolyhedron) -> PLConvexFunction:
    pcs = tuple((qn.vec(a), qn.rat(b)) for a, b in pieces)
    if not pcs:
        raise InputError("a piecewise-linear function needs at least one piece")
    n = domain.dim
    for a, _ in pcs:
        qn.check_dim(a, n, "piece slope")
    if not nonempty(domain):
        raise EmptySetError("empty domain")
    rows = list(embed(domain, n + 1, 0).constraints)
    for a, b in pcs:
        rows.append(Constraint(tuple(a) + (mpq(-1),), LE, -b))
    epi = GenPolyhedron(n + 1, tuple(rows))
    return PLConvexFunction(pcs, domain, SetMap(n, 1, UnionSet.single(epi)))


def pl_from_json(d: object) -> PLConvexFunction:
    if not isinstance(d, dict) or set(d) != {"pieces", "domain"}:
        raise InputError("function must be an object with keys pieces, domain")
    dom = poly_from_json(d["domain"])
    ps = d["pieces"]
    if not isinstance(ps, list):
        raise InputError("pieces must be a list")
    out = []
    for p in ps:
        if not isinstance(p, dict) or set(p) != {"a", "b"} or not isinstance(p["a"], list):
            raise InputError(f"bad piece {p!r}")
        out.append((p["a"], p["b"]))
    return epi_of(out, dom)


# ---------------------------------------------------------------- helpers

def topological_interior(S: UnionSet, y: Sequence[mpq]) -> bool:
    """``y`` is an interior point of ``S`` (full-space neighborhood)."""
    y = tuple(y)
    if not S.contains(y):
        return False
    return covers(universe(S.dim), local_tangent_cones(S, y)).covered


def has_interior(S: UnionSet) -> bool:
    """Some piece is full-dimensional."""
    return any(affine_hull(P).flat_dim == S.dim for P in S.pieces)


def domain_witnesses(D: UnionSet) -> list[Vec]:
    """Members of ``D``: vertices and ri points of each piece closure, and
    midpoints of those, kept only when they lie in ``D``."""
    cand: list[Vec] = []
    for P in D.pieces:
        G = to_generators(closure(P))
        cand += G.points
        p = find_point(ri_representation(P))
        if p is not None:
            cand.append(p)
        if G.points:
            k = len(G.points)
            cand.append(tuple(sum(c) / k for c in zip(*G.points)))
    mids = [tuple((a + b) / 2 for a, b in zip(p, q)) for p, q in itertools.combinations(cand, 2)]
    out = sorted({tuple(v) for v in cand + mids if D.contains(v)})
    return out


# ---------------------------------------------------------------- theorem checks

@dataclass
class TheoremReport:
    theorem: str
    applicable: bool
    reason: str = ""
    points_checked: int = 0
    witness_xs: int = 0
    violations: list = field(default_factory=list)
    directions: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "applicable": self.applicable,
            "directions": list(self.directions),
            "reason": self.reason,
            "points_checked": self.points_checked,
            "witness_xs": self.witness_xs,
            "violations": self.violations,
        }


def _xs(F: SetMap, points: Sequence[Vec]) -> list[Vec]:
    return sorted({F.split(z)[0] for z in points})


def _quasi_regular_at(S: UnionSet, pts: Sequence[Vec]) -> bool:
    return all(interior_membership("iri", S, p).verdict == interior_membership("qri", S, p).verdict for p in pts)


def graph_theorem_check(theorem: str, F: SetMap, points: Sequence[Sequence[object]]) -> TheoremReport:
    """Evaluate a graph interior formula pointwise.  Side conditions are
    verified on the instance first (at the x-coordinates of ``points``);
    when they fail the report is "not applicable", never a violation."""
    if theorem not in THEOREMS:
        raise InputError(f"unknown theorem {theorem!r}")
    pts = [qn.vec(p) for p in points]
    for p in pts:
        qn.check_dim(p, F.dim_x + F.dim_y, "point")
        if not F.graph.contains(p):
            raise InputError("check points must lie in the graph")
    rep = TheoremReport(theorem, True, witness_xs=len(_xs(F, pts)))
    G = F.graph
    cls = classify(G).cls
    xs = _xs(F, pts)
    slices = {x: slice_at(F, x) for x in xs}

    if theorem == "iri_graph":
        kind_g = kind_d = kind_s = "iri"
        forward = True
        backward = cls != NEITHER and is_convex(G)[0]
    elif theorem == "sqri_graph":
        if cls == NEITHER or not is_convex(G)[0]:
            return _na(rep, "graph not convex")
        if not all(has_interior(slices[x]) for x in xs):
            return _na(rep, "slice without interior at a witness x")
        kind_g = kind_d = kind_s = "sqri"
        forward = backward = True
    else:
        if cls == NEITHER:
            return _na(rep, "graph not nearly convex")
        if theorem == "qri_graph_fwd":
            if not _quasi_regular_at(G, pts):
                return _na(rep, "graph not quasi-regular at the witness points")
            kind_g = kind_d = kind_s = "qri"
            forward, backward = True, False
        elif theorem == "qri_graph_bwd":
            if not all(classify(slices[x]).cls != NEITHER and has_interior(slices[x]) for x in xs):
                return _na(rep, "slice not nearly convex or without interior")
            kind_g = kind_d = kind_s = "qri"
            forward, backward = False, True
        elif theorem == "qri_int_graph":
            kind_g = kind_d = "qri"
            kind_s = "int"
            backward = True
            forward = (_quasi_regular_at(G, pts)
                       and all(is_convex(slices[x])[0] and has_interior(slices[x]) for x in xs))
        else:  # qi_graph_bwd
            kind_g = kind_d = kind_s = "qi"
            forward, backward = False, True

    rep.directions = tuple(d for d, on in (("forward", forward), ("backward", backward)) if on)
    D = domain_of(F)
    for z in pts:
        x, y = F.split(z)
        left = interior_membership(kind_g, G, z).verdict
        rx = interior_membership(kind_d, D, x).verdict
        sl = slices[x]
        ry = topological_interior(sl, y) if kind_s == "int" else interior_membership(kind_s, sl, y).verdict
        right = rx and ry
        rep.points_checked += 1
        if forward and left and not right:
            rep.violations.append({"point": qn.fmt_vec(z), "direction": "forward", "graph": left,
                                   "domain": rx, "slice": ry})
        if backward and right and not left:
            rep.violations.append({"point": qn.fmt_vec(z), "direction": "backward", "graph": left,
                                   "domain": rx, "slice": ry})
    rep.violations.sort(key=lambda v: (v["point"], v["direction"]))
    return rep


def _na(rep: TheoremReport, reason: str) -> TheoremReport:
    rep.applicable = False
    rep.reason = reason
    return rep


@dataclass(frozen=True)
class AffGraphReport:
    applicable: bool
    holds: bool | None
    witness: Vec | None
    witness_xs: int

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "holds": self.holds,
                "witness": None if self.witness is None else qn.fmt_vec(self.witness),
                "witness_xs": self.witness_xs}


def aff_graph_check(F: SetMap) -> AffGraphReport:
    """Compare ``aff(graph)`` with ``aff(dom) x Y`` when every witness slice
    has interior."""
    D = domain_of(F)
    xs = domain_witnesses(D)
    for x in xs:
        if not has_interior(slice_at(F, x)):
            return AffGraphReport(False, None, x, len(xs))
    g = union_affine_hull(F.graph)
    d = union_affine_hull(D)
    n, m = F.dim_x, F.dim_y
    dirs = [tuple(v) + qn.zeros(m) for v in d.basis] + [qn.zeros(n) + qn.unit(m, i) for i in range(m)]
    prod = make_flat(tuple(d.basepoint) + qn.zeros(m), dirs)
    if prod == g:
        return AffGraphReport(True, True, None, len(xs))
    wit = next((v for v in prod.basis if v not in g.basis), prod.basepoint)
    return AffGraphReport(True, False, wit, len(xs))


def epi_formula_check(f: PLConvexFunction, points: Sequence[Sequence[object]]) -> TheoremReport:
    """At each ``(x, alpha)`` of the epigraph: epigraph membership of kind k
    iff ``x`` in the kind-k interior of the domain and ``f(x) < alpha``."""
    rep = TheoremReport("epi_formula", True, directions=("forward", "backward"))
    E = f.epigraph.graph
    D = UnionSet.single(f.domain)
    for p in points:
        z = qn.vec(p)
        qn.check_dim(z, f.dim + 1, "point")
        if not E.contains(z):
            raise InputError("check points must lie in the epigraph")
        x, alpha = z[:-1], z[-1]
        strict = f.value(x) < alpha
        rep.points_checked += 1
        for kind in ("iri", "sqri", "qri"):
            left = interior_membership(kind, E, z).verdict
            rx = interior_membership(kind, D, x).verdict
            if left != (rx and strict):
                rep.violations.append({"point": qn.fmt_vec(z), "kind": kind, "epigraph": left,
                                       "domain": rx, "below": strict})
    rep.witness_xs = len({tuple(qn.vec(p)[:-1]) for p in points})
    return rep
