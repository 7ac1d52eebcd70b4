"""Membership oracles for the six generalized interiors of a finite union of
generalized polyhedra, plus normal cones."""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from typing import Sequence

from . import exactnum as qn
from .cover import covers
from .dd import to_generators
from .errors import EmptySetError, InputError
from .exactnum import EQ, LE, LT, ONE, ZERO, Vec, mpq
from .genpoly import (
    ConePart, Constraint, GenPolyhedron, UnionSet, affine_hull, box, canonical, closure,
    homogenize_cone, implicit_equalities, intersect, ri_representation, singleton, subspace,
    union_affine_hull, universe,
)

__all__ = [
    "InteriorKind", "ConeAtPoint", "Certificate", "NormalCone", "cone_at", "cone_span",
    "is_subspace_union", "interior_membership", "normal_cone", "ri_representation",
    "local_tangent_cones",
]


class InteriorKind(str, enum.Enum):
    RINT = "rint"
    RI = "ri"
    QI = "qi"
    SQRI = "sqri"
    IRI = "iri"
    QRI = "qri"

    @classmethod
    def parse(cls, s: str) -> "InteriorKind":
        try:
            return cls(s)
        except ValueError:
            raise InputError(f"unknown interior kind {s!r}") from None


@dataclass(frozen=True)
class ConeAtPoint:
    dim: int
    point: Vec
    parts: tuple[ConePart, ...]

    def contains(self, v: Sequence[mpq]) -> bool:
        return any(p.contains(v) for p in self.parts)

    def contains_closure(self, v: Sequence[mpq]) -> bool:
        return any(p.closed.contains(v) for p in self.parts)


@dataclass(frozen=True)
class Certificate:
    """A boolean verdict with tagged evidence (``type`` key)."""

    verdict: bool
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return _evidence_json(self.evidence)


def _evidence_json(ev: dict) -> dict:
    out = {}
    for k, v in ev.items():
        if isinstance(v, tuple) and v and isinstance(v[0], tuple):
            out[k] = [qn.fmt_vec(x) for x in v]
        elif isinstance(v, tuple):
            out[k] = qn.fmt_vec(v)
        elif isinstance(v, list) and v and isinstance(v[0], tuple):
            out[k] = [qn.fmt_vec(x) for x in v]
        else:
            out[k] = v
    return out


@functools.lru_cache(maxsize=4096)
def cone_at(S: UnionSet, x: Vec) -> ConeAtPoint:
    """``cone(S - x)`` piece by piece."""
    S.require_nonempty()
    x = tuple(x)
    qn.check_dim(x, S.dim, "point")
    return ConeAtPoint(S.dim, x, tuple(homogenize_cone(p, x) for p in S.pieces))


def cone_span(cones: ConeAtPoint) -> tuple[Vec, ...]:
    """Canonical basis of the span of all closed parts."""
    n = cones.dim
    vecs: list[Vec] = []
    for part in cones.parts:
        if part.closed.constraints and _is_empty_closed(part.closed):
            continue
        vecs += affine_hull(part.closed).basis
    return qn.canonical_basis(vecs, n)


def _is_empty_closed(P: GenPolyhedron) -> bool:
    c = P.constraints
    return len(c) == 1 and qn.is_zero(c[0].a) and c[0].b < 0


@functools.lru_cache(maxsize=4096)
def _exact_pieces(cones: ConeAtPoint) -> tuple[GenPolyhedron, ...]:
    """The cone itself as a union: exact parts as-is, the others through
    their strict lifted description, plus the origin."""
    out = []
    for part in cones.parts:
        out.append(part.closed if part.exact else part.open_part())
    out.append(singleton(qn.zeros(cones.dim)))
    return tuple(out)


def is_subspace_union(cones: ConeAtPoint, mode: str) -> Certificate:
    """Is the (closed, for ``mode="closure"``) cone a linear subspace?"""
    if mode not in ("exact", "closure"):
        raise InputError(f"unknown mode {mode!r}")
    basis = cone_span(cones)
    L = subspace(basis, cones.dim)
    pieces = [p.closed for p in cones.parts] if mode == "closure" else list(_exact_pieces(cones))
    res = covers(L, pieces)
    if res.covered:
        return Certificate(True, {"type": "basis", "basis": basis})
    return Certificate(False, {"type": "gap", "point": res.witness})


def local_tangent_cones(S: UnionSet, x: Vec) -> list[GenPolyhedron]:
    """Per piece whose closure contains ``x``: the rows active at ``x`` with
    their relation kept, shifted to the origin.  Near ``x`` each piece agrees
    with ``x`` plus this cone."""
    out = []
    for P in S.pieces:
        slacks = [c.slack(x) for c in P.constraints]
        if any(s < 0 or (c.rel == EQ and s != 0) for c, s in zip(P.constraints, slacks)):
            continue
        rows = tuple(Constraint(c.a, c.rel, ZERO) for c, s in zip(P.constraints, slacks) if s == 0)
        out.append(GenPolyhedron(S.dim, rows))
    return out


def _local_box(S: UnionSet, x: Vec) -> GenPolyhedron:
    """A cube around ``x`` small enough that every piece whose closure holds
    ``x`` keeps its inactive rows inactive inside it."""
    delta = ONE
    for P in S.pieces:
        for c in P.constraints:
            s = c.slack(x)
            if s > 0:
                norm = sum((abs(t) for t in c.a), ZERO)
                if norm:
                    delta = min(delta, s / (2 * norm))
    return box([t - delta for t in x], [t + delta for t in x])


def _rint(S: UnionSet, x: Vec) -> Certificate:
    flat = union_affine_hull(S)
    D = subspace(flat.basis, S.dim)
    res = covers(D, local_tangent_cones(S, x))
    if res.covered:
        return Certificate(True, {"type": "basis", "basis": flat.basis})
    return Certificate(False, {"type": "gap", "direction": res.witness})


def _ri(S: UnionSet, x: Vec) -> Certificate:
    flat = union_affine_hull(S)
    nbhd = intersect(flat.as_poly(), _local_box(S, x))
    res = covers(nbhd, list(S.pieces))
    if res.covered:
        return Certificate(True, {"type": "neighborhood", "basis": flat.basis})
    return Certificate(False, {"type": "gap", "point": res.witness})


def interior_membership(kind: InteriorKind | str, S: UnionSet, x: Sequence[object]) -> Certificate:
    kind = InteriorKind.parse(kind) if isinstance(kind, str) else kind
    x = qn.vec(x)
    qn.check_dim(x, S.dim, "point")
    if not S.contains(x):
        return Certificate(False, {"type": "not_member"})
    if kind is InteriorKind.RINT:
        return _rint(S, x)
    if kind is InteriorKind.RI:
        return _ri(S, x)
    cones = cone_at(S, x)
    if kind is InteriorKind.QI:
        res = covers(universe(S.dim), [p.closed for p in cones.parts])
        if res.covered:
            return Certificate(True, {"type": "basis", "basis": tuple(qn.unit(S.dim, i) for i in range(S.dim))})
        return Certificate(False, {"type": "gap", "direction": res.witness})
    if kind is InteriorKind.QRI:
        return is_subspace_union(cones, "closure")
    if kind is InteriorKind.IRI:
        return is_subspace_union(cones, "exact")
    # sqri: a subspace which is also closed, i.e. equal to its closure
    iri = is_subspace_union(cones, "exact")
    if not iri.verdict:
        return iri
    exact = list(_exact_pieces(cones))
    for part in cones.parts:
        if part.exact:
            continue
        res = covers(part.closed, exact)
        if not res.covered:
            return Certificate(False, {"type": "not_closed", "direction": res.witness})
    return iri


# ---------------------------------------------------------------- normal cones

@dataclass(frozen=True)
class NormalCone:
    """``N(x; S)`` as a closed cone in constraint form."""

    cone: GenPolyhedron

    def contains(self, y: Sequence[mpq]) -> bool:
        return self.cone.contains(y)

    def is_subspace(self) -> bool:
        ineq = [i for i, c in enumerate(self.cone.constraints) if c.rel != EQ]
        if not ineq:
            return True
        return set(implicit_equalities(self.cone)) == set(ineq)

    def is_trivial(self) -> bool:
        return affine_hull(self.cone).flat_dim == 0

    def span_basis(self) -> tuple[Vec, ...]:
        return affine_hull(self.cone).basis


def normal_cone(S: UnionSet, x: Sequence[object]) -> NormalCone:
    """Polar of the closed cone at ``x``: functionals nonpositive on every
    generator of every closed part (and zero on their lines)."""
    x = qn.vec(x)
    if not S.contains(x):
        raise InputError("the normal cone needs a member point")
    n = S.dim
    rows = []
    for part in cone_at(S, x).parts:
        G = to_generators(part.closed)
        for r in G.rays:
            rows.append(Constraint(r, LE, ZERO))
        for l in G.lines:
            rows.append(Constraint(l, EQ, ZERO))
    return NormalCone(canonical(GenPolyhedron(n, tuple(rows))))
