"""Separation and proper separation of finite unions by hyperplanes, with
exact witnesses."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import exactnum as qn
from .cover import covers
from .dd import GeneratorSet, convex_hull, generators_of_union, sum_generators, negate_generators
from .errors import EmptySetError, GenriError
from .exactnum import EQ, LE, LT, ZERO, Vec, mpq
from .genpoly import (
    Constraint, GenPolyhedron, UnionSet, closure, find_point, implicit_equalities, intersect,
    minkowski_sum_fm, negate, nonempty, product, ri_representation, singleton,
)
from .nearconvex import NearlyConvexSet, qri_of_nearly_convex

__all__ = [
    "SeparationWitness", "SeparationReport", "properly_separate", "point_set_separation",
    "qri_disjointness_equivalence", "sup_over", "inf_over", "verify_witness",
]


@dataclass(frozen=True)
class SeparationWitness:
    """``sup <xstar, S2> <= level <= inf <xstar, S1>``; ``strict_pair`` is
    ``(a in S1, b in S2)`` with ``<xstar, b> < <xstar, a>`` when proper."""

    xstar: Vec
    level: mpq
    strict_pair: tuple[Vec, Vec] | None


@dataclass(frozen=True)
class SeparationReport:
    separable: bool
    properly_separable: bool
    witness: SeparationWitness | None
    reason: str = ""

    def to_json(self) -> dict:
        w = self.witness
        out = {"separable": self.separable, "proper": self.properly_separable,
               "xstar": None, "level": None, "strict_pair": None}
        if w is not None:
            out["xstar"] = qn.fmt_vec(w.xstar)
            out["level"] = qn.fmt(w.level)
            if w.strict_pair is not None:
                out["strict_pair"] = {"a": qn.fmt_vec(w.strict_pair[0]), "b": qn.fmt_vec(w.strict_pair[1])}
        return out


def _extreme(S: UnionSet, c: Vec, sense: str) -> mpq | None:
    """``sup`` (``max``) or ``inf`` (``min``) of ``c.x`` over ``S``; ``None``
    when unbounded.  Optimizing over each closure gives the same value."""
    best = None
    for P in S.pieces:
        Pc = closure(P)
        out = qn.lp_solve(qn.LPProblem(c, tuple(x.as_row() for x in Pc.constraints), sense))
        if out.status == "unbounded":
            return None
        if out.status == "optimal":
            v = out.value
            if best is None or (v > best if sense == "max" else v < best):
                best = v
    return best


def sup_over(S: UnionSet, c: Vec) -> mpq | None:
    return _extreme(S, c, "max")


def inf_over(S: UnionSet, c: Vec) -> mpq | None:
    return _extreme(S, c, "min")


def verify_witness(S1: UnionSet, S2: UnionSet, w: SeparationWitness, proper: bool) -> bool:
    if qn.is_zero(w.xstar):
        return False
    hi = sup_over(S2, w.xstar)
    lo = inf_over(S1, w.xstar)
    if hi is None or lo is None or not hi <= w.level <= lo:
        return False
    if proper:
        if w.strict_pair is None:
            return False
        a, b = w.strict_pair
        if not (S1.contains(a) and S2.contains(b)):
            return False
        return qn.dot(w.xstar, b) < qn.dot(w.xstar, a)
    return True


def _strict_pair(S1: UnionSet, S2: UnionSet, xstar: Vec) -> tuple[Vec, Vec] | None:
    n = S1.dim
    for P in S1.pieces:
        for Q in S2.pieces:
            R = product(P, Q)
            row = Constraint(qn.neg(xstar) + tuple(xstar), LT, ZERO)
            z = find_point(R.with_constraints([row]))
            if z is not None:
                return z[:n], z[n:]
    return None


def _difference_hull(S1: UnionSet, S2: UnionSet) -> GenPolyhedron:
    G1 = generators_of_union(S1.pieces, S1.dim)
    G2 = generators_of_union(S2.pieces, S2.dim)
    return convex_hull(sum_generators(G1, negate_generators(G2)))


def properly_separate(S1: UnionSet, S2: UnionSet) -> SeparationReport:
    """Decide (proper) separability through ``D = cl conv S1 - cl conv S2``:
    proper iff the origin is outside ``ri D``; plain iff outside ``int D``."""
    S1.require_nonempty()
    S2.require_nonempty()
    if S1.dim != S2.dim:
        raise GenriError("dimension mismatch")
    n = S1.dim
    D = _difference_hull(S1, S2)
    origin = qn.zeros(n)
    xstar = None
    reason = ""
    for c in D.constraints:
        if not c.holds(origin):
            # 0 violates a row of D: the row's normal separates strictly
            if c.rel == EQ:
                xstar = c.a if c.b > 0 else qn.neg(c.a)
            else:
                xstar = qn.neg(c.a)
            reason = "origin_outside"
            break
    if xstar is None:
        imp = set(implicit_equalities(D))
        for i, c in enumerate(D.constraints):
            if c.rel != EQ and i not in imp and c.b == 0:
                xstar = qn.neg(c.a)
                reason = "origin_on_relative_boundary"
                break
    if xstar is not None:
        level = sup_over(S2, xstar)
        pair = _strict_pair(S1, S2, xstar)
        w = SeparationWitness(tuple(xstar), level, pair)
        if pair is None or not verify_witness(S1, S2, w, True):
            raise GenriError("separating functional failed re-verification; kernel bug")
        return SeparationReport(True, True, w, reason)
    # origin in ri D: separable only by a functional constant on D
    eqs = [c for c in D.constraints if c.rel == EQ]
    imp = implicit_equalities(D)
    eqs += [D.constraints[i] for i in imp]
    if eqs:
        xstar = tuple(eqs[0].a)
        w = SeparationWitness(xstar, sup_over(S2, xstar), None)
        if not verify_witness(S1, S2, w, False):
            raise GenriError("separating functional failed re-verification; kernel bug")
        return SeparationReport(True, False, w, "origin_in_relative_interior")
    return SeparationReport(False, False, None, "origin_in_interior")


def point_set_separation(x: Sequence[object], S: UnionSet, proper: bool) -> SeparationReport:
    """Separate ``{x}`` (first set) from ``S``; the report's ``separable``
    answers the question asked (proper or plain)."""
    x = qn.vec(x)
    rep = properly_separate(UnionSet.single(singleton(x)), S)
    if proper:
        return rep if rep.properly_separable else SeparationReport(False, False, None, rep.reason)
    return rep


# ---------------------------------------------------------------- two nearly convex sets

@dataclass(frozen=True)
class DisjointnessReport:
    condition_holds: bool
    equivalence_verified: bool
    properly_separable: bool | None
    qri_disjoint: bool | None
    witness: Vec | None
    detail: str

    def to_json(self) -> dict:
        return {
            "condition_holds": self.condition_holds,
            "equivalence_verified": self.equivalence_verified,
            "properly_separable": self.properly_separable,
            "qri_disjoint": self.qri_disjoint,
            "witness": None if self.witness is None else qn.fmt_vec(self.witness),
            "detail": self.detail,
        }


def _intersects(S1: UnionSet, S2: UnionSet) -> bool:
    return any(nonempty(intersect(P, Q)) for P in S1.pieces for Q in S2.pieces)


def qri_disjointness_equivalence(N1: NearlyConvexSet, N2: NearlyConvexSet) -> DisjointnessReport:
    """Check ``qri(N1 - N2) = qri N1 - qri N2``; when it holds, compare proper
    separability with disjointness of the two quasi-relative interiors."""
    if not _intersects(N1.body, N2.body):
        raise EmptySetError("the two sets do not intersect")
    n = N1.dim
    # left: ri of the closed hull of the difference (qri of a nearly convex set)
    G = sum_generators(generators_of_union(N1.body.pieces, n), negate_generators(generators_of_union(N2.body.pieces, n)))
    left = ri_representation(convex_hull(G))
    # right: difference of the two relative interiors, by lifting
    q1, q2 = qri_of_nearly_convex(N1), qri_of_nearly_convex(N2)
    right = minkowski_sum_fm(q1, negate(q2))
    r1 = covers(left, [right])
    if not r1.covered:
        return DisjointnessReport(False, False, None, None, r1.witness, "hypothesis fails: point of qri(difference) missing")
    r2 = covers(right, [left])
    if not r2.covered:
        return DisjointnessReport(False, False, None, None, r2.witness, "hypothesis fails: extra point in difference of qri")
    sep = properly_separate(N1.body, N2.body)
    meet = find_point(intersect(q1, q2))
    disjoint = meet is None
    ok = sep.properly_separable == disjoint
    detail = "equivalence holds" if ok else "equivalence violated"
    return DisjointnessReport(True, ok, sep.properly_separable, disjoint, meet, detail)
