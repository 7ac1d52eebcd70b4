"""Near convexity: classification of finite unions, the nearly convex set
type, and the relative-interior formula available for it."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import exactnum as qn
from .cover import covers
from .dd import GeneratorSet, convex_hull, generators_of_union, hull_of_union, to_generators
from .errors import GenriError, InputError
from .exactnum import EQ, LE, ONE, ZERO, Vec, mpq
from .genpoly import (
    Constraint, GenPolyhedron, UnionSet, canonical, closure, contains_poly, embed, find_point,
    linear_image_fm, open_segments_lifted, poly_from_json, poly_to_json, project, ri_representation, translate,
    union_from_json, union_to_json,
)
from .interiors import interior_membership

__all__ = [
    "UnionSet", "NearlyConvexSet", "Classification", "classify", "is_convex", "characterizations",
    "qri_of_nearly_convex", "nc_translate", "nc_linear_image", "hull_by_lifting",
]

CONVEX, NEARLY_CONVEX, NEITHER = "convex", "nearly_convex", "neither"


@dataclass(frozen=True)
class Classification:
    cls: str
    hull: GenPolyhedron
    witness: Vec | None
    stage: str

    def to_json(self) -> dict:
        return {
            "class": self.cls,
            "hull": poly_to_json(self.hull),
            "witness": None if self.witness is None else qn.fmt_vec(self.witness),
        }


def _nice_gap(G: GeneratorSet, target: GenPolyhedron, pieces: Sequence[GenPolyhedron]) -> Vec | None:
    """A readable gap point: the first generator midpoint inside ``target``
    but outside every piece."""
    pts = list(G.points)
    for p, q in itertools.combinations(pts, 2):
        m = tuple((a + b) / 2 for a, b in zip(p, q))
        if target.contains(m) and not any(P.contains(m) for P in pieces):
            return m
    return None


def classify(S: UnionSet) -> Classification:
    """Convex (equal to its closed convex hull), nearly convex (closure convex
    with its relative interior inside), or neither; the witness explains the
    first failing stage.  Convexity of a set that is not closed is decided by
    :func:`is_convex`."""
    S.require_nonempty()
    G = generators_of_union(S.pieces, S.dim)
    Q = convex_hull(G)
    closures = list(S.closures())
    res = covers(Q, closures)
    if not res.covered:
        w = _nice_gap(G, Q, closures) or res.witness
        return Classification(NEITHER, Q, w, "closure_not_convex")
    ri = ri_representation(Q)
    res = covers(ri, list(S.pieces))
    if not res.covered:
        w = _nice_gap(G, ri, S.pieces) or res.witness
        return Classification(NEITHER, Q, w, "relative_interior_missing")
    res = covers(Q, list(S.pieces))
    if not res.covered:
        w = _nice_gap(G, Q, S.pieces) or res.witness
        return Classification(NEARLY_CONVEX, Q, w, "boundary_missing")
    return Classification(CONVEX, Q, None, "convex")


def is_convex(S: UnionSet) -> tuple[bool, Vec | None]:
    """Exact convexity of the union itself (closed or not), with a point on a
    segment between two members that is missing from the set otherwise.

    The pieces are convex, so only open segments joining two different
    pieces need checking; each such segment set is covered in its lifted
    form, so no projection is computed.  A pair with one piece inside the
    relative interior of the closed hull is skipped once that relative
    interior is known to be inside the set (open segments from there stay in
    it).
    """
    S.require_nonempty()
    c = classify(S)
    if c.cls == CONVEX:
        return True, None
    n = S.dim
    inner: set[int] = set()
    if c.cls == NEARLY_CONVEX:
        ri = ri_representation(c.hull)
        inner = {i for i, P in enumerate(S.pieces) if contains_poly(ri, P)}
    for i, j in itertools.combinations(range(len(S.pieces)), 2):
        if i in inner or j in inner:
            continue
        L = open_segments_lifted(S.pieces[i], S.pieces[j])
        res = covers(L, [embed(P, L.dim, 0) for P in S.pieces])
        if not res.covered:
            return False, tuple(res.witness[:n])
    return True, None


# ---------------------------------------------------------------- independent characterizations

def hull_by_lifting(polys: Sequence[GenPolyhedron], n: int) -> GenPolyhedron:
    """Closed convex hull of a union by projecting the disjunctive lifting
    ``x = sum x_k``, ``x_k in lam_k cl P_k``, ``sum lam_k = 1``."""
    polys = [closure(P) for P in polys]
    polys = [P for P in polys if find_point(P) is not None]
    if not polys:
        from .genpoly import empty
        return empty(n)
    if len(polys) == 1:
        return canonical(polys[0])
    K = len(polys)
    # variables: x (n), then per piece k>=1: x_k (n), lam_k (1); piece 0 is substituted
    N = n + K * (n + 1) - (n + 1)
    rows = []

    def var_x(k: int, i: int) -> int:
        return n + (k - 1) * (n + 1) + i

    def var_l(k: int) -> int:
        return n + (k - 1) * (n + 1) + n

    for k, P in enumerate(polys):
        for c in P.constraints:
            a = [ZERO] * N
            if k == 0:
                # x_0 = x - sum_k x_k, lam_0 = 1 - sum_k lam_k
                for i in range(n):
                    a[i] += c.a[i]
                    for j in range(1, K):
                        a[var_x(j, i)] -= c.a[i]
                for j in range(1, K):
                    a[var_l(j)] += c.b
                rhs = c.b
            else:
                for i in range(n):
                    a[var_x(k, i)] = c.a[i]
                a[var_l(k)] = -c.b
                rhs = ZERO
            rows.append(Constraint(tuple(a), c.rel, rhs))
    for k in range(1, K):
        a = [ZERO] * N
        a[var_l(k)] = -ONE
        rows.append(Constraint(tuple(a), LE, ZERO))
    a = [ZERO] * N
    for k in range(1, K):
        a[var_l(k)] = ONE
    rows.append(Constraint(tuple(a), LE, ONE))
    return project(GenPolyhedron(N, tuple(rows)), list(range(n)), prune=True)


def _generators_inside(G: GeneratorSet, P: GenPolyhedron) -> bool:
    """``conv/cone/span`` of ``G`` lies in the closed polyhedron ``P``."""
    for c in P.constraints:
        rel_ok = (lambda v, b: v == b) if c.rel == EQ else (lambda v, b: v <= b)
        if not all(rel_ok(qn.dot(c.a, p), c.b) for p in G.points):
            return False
        if not all(rel_ok(qn.dot(c.a, r), ZERO) for r in G.rays):
            return False
        if not all(qn.dot(c.a, l) == 0 for l in G.lines):
            return False
    return True


def characterizations(S: UnionSet) -> dict[str, bool]:
    """The four equivalent descriptions of near convexity, each decided by
    its own route.

    ``sandwich_qri``: some convex C with nonempty quasi-relative interior and
    C in S in cl C (C = ri of the lifted hull, qri checked by the cone oracle,
    closure containment by generators).
    ``ri_sandwich``: some convex C with ri C in S in cl C (C = generator hull
    in reversed piece order, containment by LP).
    ``convex_sandwich``: some convex D with D in S in cl D (D = ri of the
    lifted hull, closure computed by relaxation).
    ``closure_convex``: cl S convex and ri(cl S) in S (the classifier).
    """
    S.require_nonempty()
    n = S.dim
    out = {}
    rev = list(reversed(S.pieces))

    lifted = hull_by_lifting(S.pieces, n)
    C = ri_representation(lifted)
    c0 = find_point(C)
    ok = c0 is not None and interior_membership("qri", UnionSet.single(C), c0).verdict
    ok = ok and covers(C, list(S.pieces)).covered
    if ok:
        Cl = closure(C)
        ok = all(_generators_inside(to_generators(closure(P)), Cl) for P in S.pieces)
    out["sandwich_qri"] = ok

    H = hull_of_union(rev, n)
    ok = all(contains_poly(H, P) for P in S.pieces)
    ok = ok and covers(ri_representation(H), rev).covered
    out["ri_sandwich"] = ok

    D = C
    ok = covers(D, rev).covered and all(contains_poly(closure(D), P) for P in S.pieces)
    out["convex_sandwich"] = ok

    out["closure_convex"] = classify(S).cls != NEITHER
    return out


# ---------------------------------------------------------------- nearly convex sets

@dataclass(frozen=True)
class NearlyConvexSet:
    """A union whose closure ``hull`` is convex with ``ri(hull)`` inside it."""

    hull: GenPolyhedron
    body: UnionSet

    @classmethod
    def build(cls, body: UnionSet) -> "NearlyConvexSet":
        c = classify(body)
        if c.cls == NEITHER:
            raise InputError(f"not nearly convex ({c.stage})")
        return cls(c.hull, body)

    @property
    def dim(self) -> int:
        return self.body.dim

    def to_json(self) -> dict:
        return {"hull": poly_to_json(self.hull), "body": union_to_json(self.body)}


def qri_of_nearly_convex(N: NearlyConvexSet) -> GenPolyhedron:
    """In finite dimension the quasi-relative interior of a nearly convex set
    is the relative interior of its closure."""
    return ri_representation(N.hull)


def nc_translate(N: NearlyConvexSet, v: Sequence[object]) -> NearlyConvexSet:
    v = qn.vec(v)
    body = UnionSet(N.dim, tuple(translate(P, v) for P in N.body.pieces))
    return NearlyConvexSet(canonical(translate(N.hull, v)), body)


def nc_linear_image(N: NearlyConvexSet, T: Sequence[Sequence[object]]) -> NearlyConvexSet:
    T = [qn.vec(r) for r in T]
    m = len(T)
    body = UnionSet(m, tuple(linear_image_fm(P, T) for P in N.body.pieces))
    c = classify(body)
    if c.cls == NEITHER:
        raise GenriError("linear image of a nearly convex set failed to classify; kernel bug")
    return NearlyConvexSet(c.hull, body)


def nearly_convex_from_json(d: object) -> NearlyConvexSet:
    if isinstance(d, dict) and "body" in d:
        return NearlyConvexSet.build(union_from_json(d["body"]))
    return NearlyConvexSet.build(union_from_json(d))
