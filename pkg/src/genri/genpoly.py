"""Generalized polyhedra: finitely many affine constraints tagged ``<=``, ``<``
or ``=``, plus the primitives built on them (emptiness, affine hulls,
projection, cones at a point).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import exactnum as qn
from .errors import DimensionError, EmptySetError, InputError
from .exactnum import EQ, LE, LT, ONE, ZERO, Vec, mpq, rat

_REL_RANK = {EQ: 0, LE: 1, LT: 2}


@dataclass(frozen=True)
class Constraint:
    a: Vec
    rel: str
    b: mpq

    def holds(self, x: Sequence[mpq]) -> bool:
        v = qn.dot(self.a, x)
        if self.rel == LE:
            return v <= self.b
        if self.rel == LT:
            return v < self.b
        return v == self.b

    def slack(self, x: Sequence[mpq]) -> mpq:
        return self.b - qn.dot(self.a, x)

    def negations(self) -> tuple["Constraint", ...]:
        """Constraints whose union is the complement of this one."""
        na = qn.neg(self.a)
        if self.rel == LE:
            return (Constraint(na, LT, -self.b),)
        if self.rel == LT:
            return (Constraint(na, LE, -self.b),)
        return (Constraint(self.a, LT, self.b), Constraint(na, LT, -self.b))

    def relaxed(self) -> "Constraint":
        return Constraint(self.a, LE, self.b) if self.rel == LT else self

    def as_row(self) -> tuple[Vec, str, mpq]:
        return (self.a, self.rel, self.b)


def constraint(a: Iterable[object], rel: str, b: object) -> Constraint:
    """Build a constraint, accepting ``>=`` and ``>`` by flipping signs."""
    a = qn.vec(a)
    b = rat(b)
    if rel == ">=":
        return Constraint(qn.neg(a), LE, -b)
    if rel == ">":
        return Constraint(qn.neg(a), LT, -b)
    if rel not in qn.RELATIONS:
        raise InputError(f"unknown relation {rel!r}")
    return Constraint(a, rel, b)


@dataclass(frozen=True)
class GenPolyhedron:
    dim: int
    constraints: tuple[Constraint, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 0:
            raise InputError(f"bad dimension {self.dim!r}")
        cs = tuple(self.constraints)
        object.__setattr__(self, "constraints", cs)
        for c in cs:
            if not isinstance(c, Constraint):
                raise InputError("constraints must be Constraint values")
            qn.check_dim(c.a, self.dim, "constraint normal")
            if c.rel not in qn.RELATIONS:
                raise InputError(f"unknown relation {c.rel!r}")

    @classmethod
    def of(cls, dim: int, rows: Iterable[tuple[Iterable[object], str, object]]) -> "GenPolyhedron":
        return cls(dim, tuple(constraint(a, rel, b) for a, rel, b in rows))

    def rows(self) -> list[tuple[Vec, str, mpq]]:
        return [c.as_row() for c in self.constraints]

    @property
    def is_closed(self) -> bool:
        return all(c.rel != LT for c in self.constraints)

    def contains(self, x: Sequence[mpq]) -> bool:
        qn.check_dim(x, self.dim, "point")
        return all(c.holds(x) for c in self.constraints)

    def relaxation(self) -> "GenPolyhedron":
        return GenPolyhedron(self.dim, tuple(c.relaxed() for c in self.constraints))

    def with_constraints(self, extra: Iterable[Constraint]) -> "GenPolyhedron":
        return GenPolyhedron(self.dim, self.constraints + tuple(extra))

    def equalities(self) -> list[Constraint]:
        return [c for c in self.constraints if c.rel == EQ]

    def inequalities(self) -> list[Constraint]:
        return [c for c in self.constraints if c.rel != EQ]


def universe(n: int) -> GenPolyhedron:
    return GenPolyhedron(n, ())


def empty(n: int) -> GenPolyhedron:
    return GenPolyhedron(n, (Constraint(qn.zeros(n), LE, mpq(-1)),))


def singleton(x: Sequence[object]) -> GenPolyhedron:
    x = qn.vec(x)
    n = len(x)
    return GenPolyhedron(n, tuple(Constraint(qn.unit(n, i), EQ, x[i]) for i in range(n)))


def box(lo: Sequence[object], hi: Sequence[object], strict: bool = False) -> GenPolyhedron:
    lo, hi = qn.vec(lo), qn.vec(hi)
    n = len(lo)
    rel = LT if strict else LE
    cs = []
    for i in range(n):
        cs.append(Constraint(qn.neg(qn.unit(n, i)), rel, -lo[i]))
        cs.append(Constraint(qn.unit(n, i), rel, hi[i]))
    return GenPolyhedron(n, tuple(cs))


def subspace(basis: Sequence[Sequence[mpq]], n: int) -> GenPolyhedron:
    """The linear span of ``basis`` as an equality-only polyhedron."""
    normals = qn.orth_complement(basis, n)
    return GenPolyhedron(n, tuple(Constraint(v, EQ, ZERO) for v in normals))


def membership(P: GenPolyhedron, x: Sequence[object]) -> bool:
    return P.contains(qn.vec(x))


# ---------------------------------------------------------------- emptiness

@dataclass(frozen=True)
class Emptiness:
    """``witness`` is a member when nonempty; ``certificate`` holds the LP
    multipliers proving emptiness otherwise."""

    empty: bool
    witness: Vec | None
    certificate: Vec | None


def is_empty(P: GenPolyhedron) -> Emptiness:
    res = qn.strict_feasibility(P.rows(), P.dim)
    if res.feasible:
        return Emptiness(False, res.witness, None)
    return Emptiness(True, None, res.outcome.duals)


def nonempty(P: GenPolyhedron) -> bool:
    return not is_empty(P).empty


def find_point(P: GenPolyhedron) -> Vec | None:
    return is_empty(P).witness


def closure(P: GenPolyhedron) -> GenPolyhedron:
    """Topological closure.

    A nonempty generalized polyhedron is dense in its relaxation: any point of
    the relaxation is a limit of points on the segment toward a member, and
    those satisfy every strict row strictly.
    """
    if P.is_closed:
        return P
    if is_empty(P).empty:
        return empty(P.dim)
    return P.relaxation()


# ---------------------------------------------------------------- canonical form

def _scaled(c: Constraint) -> Constraint | None:
    """Integer coprime rescaling; ``None`` for a tautology, ``empty`` marker
    via a zero-normal infeasible row."""
    if qn.is_zero(c.a):
        ok = (c.b >= 0) if c.rel == LE else (c.b > 0) if c.rel == LT else (c.b == 0)
        return None if ok else Constraint(c.a, LE, mpq(-1))
    p = qn.primitive(c.a + (c.b,))
    a, b = p[:-1], p[-1]
    if c.rel == EQ:
        lead = next(x for x in a if x)
        if lead < 0:
            a, b = qn.neg(a), -b
    return Constraint(a, c.rel, b)


def canonical(P: GenPolyhedron) -> GenPolyhedron:
    """Syntactic normal form: equalities in reduced echelon form, inequality
    normals reduced modulo the equality span (zero on pivot columns), every
    row scaled to coprime integers, duplicates merged, rows sorted.

    Purely algebraic (no LP), so two descriptions of the same set may still
    differ; :func:`reduce` removes redundancy as well.
    """
    n = P.dim
    eq_aug = [tuple(c.a) + (c.b,) for c in P.constraints if c.rel == EQ]
    R, piv = qn.rref(eq_aug, n + 1) if eq_aug else ([], [])
    if n in piv:
        return empty(n)
    eqs = [Constraint(tuple(r[:n]), EQ, r[n]) for r in R]
    out: dict[Vec, tuple[str, mpq]] = {}
    for c in P.constraints:
        if c.rel == EQ:
            continue
        a, b = list(c.a), c.b
        for row, p in zip(R, piv):
            f = a[p]
            if f:
                a = [x - f * y for x, y in zip(a, row[:n])]
                b = b - f * row[n]
        s = _scaled(Constraint(tuple(a), c.rel, b))
        if s is None:
            continue
        if qn.is_zero(s.a):
            return empty(n)
        # merge parallel rows with the same normal: keep the tighter one
        prev = out.get(s.a)
        if prev is None or s.b < prev[1] or (s.b == prev[1] and s.rel == LT):
            out[s.a] = (s.rel, s.b)
    rows = [_scaled(c) for c in eqs]
    rows += [Constraint(a, rel, b) for a, (rel, b) in out.items()]
    rows.sort(key=lambda c: (_REL_RANK[c.rel], c.a, c.b))
    return GenPolyhedron(n, tuple(rows))


def is_canonical_empty(P: GenPolyhedron) -> bool:
    return len(P.constraints) == 1 and qn.is_zero(P.constraints[0].a) and P.constraints[0].b < 0


def _redundant(rest: Sequence[Constraint], c: Constraint, n: int) -> bool:
    for neg in c.negations():
        if nonempty(GenPolyhedron(n, tuple(rest) + (neg,))):
            return False
    return True


def prune_redundant(P: GenPolyhedron) -> GenPolyhedron:
    """Drop inequality rows implied by the remaining ones (one LP per row)."""
    keep = list(P.constraints)
    i = 0
    while i < len(keep):
        c = keep[i]
        if c.rel != EQ and _redundant(keep[:i] + keep[i + 1:], c, P.dim):
            del keep[i]
        else:
            i += 1
    return GenPolyhedron(P.dim, tuple(keep))


def reduce(P: GenPolyhedron) -> GenPolyhedron:
    """Semantic normal form: implicit equalities made explicit, redundancy
    removed, then :func:`canonical`."""
    if is_empty(P).empty:
        return empty(P.dim)
    imp = set(implicit_equalities(P))
    rows = []
    for i, c in enumerate(P.constraints):
        rows.append(Constraint(c.a, EQ, c.b) if i in imp else c)
    Q = canonical(GenPolyhedron(P.dim, tuple(rows)))
    return canonical(prune_redundant(Q))


def same_set(P: GenPolyhedron, Q: GenPolyhedron) -> bool:
    """Set equality by two-sided containment (exact)."""
    return contains_poly(P, Q) and contains_poly(Q, P)


def contains_poly(outer: GenPolyhedron, inner: GenPolyhedron) -> bool:
    """``inner`` is a subset of ``outer`` (convex outer, so row-wise)."""
    if outer.dim != inner.dim:
        raise DimensionError("dimension mismatch")
    if is_empty(inner).empty:
        return True
    for c in outer.constraints:
        for neg in c.negations():
            if nonempty(inner.with_constraints([neg])):
                return False
    return True


# ---------------------------------------------------------------- implicit equalities and hulls

def implicit_equalities(P: GenPolyhedron) -> list[int]:
    """Indices of inequality rows that hold with equality on all of ``cl P``.

    Iterates the LP ``max sum s_i`` with ``a_i x + s_i <= b_i``, ``0 <= s_i <= 1``
    over the still-undecided rows; rows reaching a positive slack are dropped
    until the optimum is zero.  ``P`` must be nonempty.
    """
    n = P.dim
    cand = [i for i, c in enumerate(P.constraints) if c.rel != EQ]
    fixed = [(c.a, EQ if c.rel == EQ else LE, c.b) for c in P.constraints]
    while cand:
        k = len(cand)
        idx = {i: j for j, i in enumerate(cand)}
        rows = []
        for i, (a, rel, b) in enumerate(fixed):
            ext = [ZERO] * k
            if i in idx:
                ext[idx[i]] = ONE
            rows.append((tuple(a) + tuple(ext), rel, b))
        for j in range(k):
            e = [ZERO] * (n + k)
            e[n + j] = ONE
            rows.append((tuple(e), LE, ONE))
            e = list(e)
            e[n + j] = -ONE
            rows.append((tuple(e), LE, ZERO))
        obj = qn.zeros(n) + (ONE,) * k
        out = qn.lp_solve(qn.LPProblem(obj, tuple(rows)))
        if out.status == "infeasible":
            raise EmptySetError("implicit equalities of an empty set")
        if out.value == 0:
            return cand
        s = out.point[n:]
        cand = [i for j, i in enumerate(cand) if s[j] == 0]
    return []


@dataclass(frozen=True)
class AffineFlat:
    """``basepoint + span(basis)``; the basis is a canonical echelon basis and
    the basepoint is the member with zero pivot coordinates."""

    basepoint: Vec
    basis: tuple[Vec, ...]

    @property
    def dim(self) -> int:
        return len(self.basepoint)

    @property
    def flat_dim(self) -> int:
        return len(self.basis)

    def contains(self, x: Sequence[mpq]) -> bool:
        return self.as_poly().contains(x)

    def normals(self) -> tuple[Vec, ...]:
        return qn.orth_complement(self.basis, self.dim)

    def as_poly(self) -> GenPolyhedron:
        return GenPolyhedron(self.dim, tuple(Constraint(v, EQ, qn.dot(v, self.basepoint)) for v in self.normals()))

    def direction(self) -> GenPolyhedron:
        return subspace(self.basis, self.dim)


def make_flat(point: Sequence[mpq], directions: Sequence[Sequence[mpq]]) -> AffineFlat:
    n = len(point)
    basis = qn.canonical_basis(list(directions), n)
    # move the basepoint to the unique member vanishing on pivot columns
    R, piv = qn.rref(basis, n) if basis else ([], [])
    x = list(point)
    for row, p in zip(R, piv):
        f = x[p]
        if f:
            x = [xi - f * ri for xi, ri in zip(x, row)]
    return AffineFlat(tuple(x), basis)


def affine_hull(P: GenPolyhedron) -> AffineFlat:
    e = is_empty(P)
    if e.empty:
        raise EmptySetError("affine hull of an empty set")
    imp = set(implicit_equalities(P))
    eqs = [c for i, c in enumerate(P.constraints) if c.rel == EQ or i in imp]
    if not eqs:
        return make_flat(qn.zeros(P.dim), [qn.unit(P.dim, i) for i in range(P.dim)])
    sol = qn.solve_linear([c.a for c in eqs], [c.b for c in eqs])
    return make_flat(sol.solution, sol.nullspace)


def affine_hull_of_points(points: Sequence[Vec], directions: Sequence[Vec] = ()) -> AffineFlat:
    p0 = points[0]
    return make_flat(p0, [qn.sub(p, p0) for p in points[1:]] + list(directions))


def ri_representation(P: GenPolyhedron) -> GenPolyhedron:
    """Relative interior: implicit equalities become ``=``, every other
    inequality becomes strict."""
    if is_empty(P).empty:
        raise EmptySetError("relative interior of an empty set")
    imp = set(implicit_equalities(P))
    rows = []
    for i, c in enumerate(P.constraints):
        if c.rel == EQ or i in imp:
            rows.append(Constraint(c.a, EQ, c.b))
        else:
            rows.append(Constraint(c.a, LT, c.b))
    return canonical(GenPolyhedron(P.dim, tuple(rows)))


# ---------------------------------------------------------------- transformations

def intersect(P: GenPolyhedron, Q: GenPolyhedron) -> GenPolyhedron:
    if P.dim != Q.dim:
        raise DimensionError("dimension mismatch")
    return GenPolyhedron(P.dim, P.constraints + Q.constraints)


def translate(P: GenPolyhedron, v: Sequence[mpq]) -> GenPolyhedron:
    """``P + v``."""
    qn.check_dim(v, P.dim, "translation")
    return GenPolyhedron(P.dim, tuple(Constraint(c.a, c.rel, c.b + qn.dot(c.a, v)) for c in P.constraints))


def negate(P: GenPolyhedron) -> GenPolyhedron:
    return GenPolyhedron(P.dim, tuple(Constraint(qn.neg(c.a), c.rel, c.b) for c in P.constraints))


def embed(P: GenPolyhedron, n: int, offset: int) -> GenPolyhedron:
    """Lift ``P`` to ``Q^n`` acting on coordinates ``offset .. offset+dim``."""
    cs = []
    for c in P.constraints:
        a = [ZERO] * n
        a[offset:offset + P.dim] = c.a
        cs.append(Constraint(tuple(a), c.rel, c.b))
    return GenPolyhedron(n, tuple(cs))


def product(P: GenPolyhedron, Q: GenPolyhedron) -> GenPolyhedron:
    n = P.dim + Q.dim
    return intersect(embed(P, n, 0), embed(Q, n, P.dim))


def substitute(P: GenPolyhedron, values: dict[int, mpq]) -> GenPolyhedron:
    """Fix the coordinates in ``values``; the result lives on the rest."""
    free = [j for j in range(P.dim) if j not in values]
    cs = []
    for c in P.constraints:
        b = c.b - sum((c.a[j] * v for j, v in values.items()), ZERO)
        cs.append(Constraint(tuple(c.a[j] for j in free), c.rel, b))
    return GenPolyhedron(len(free), tuple(cs))


def affine_preimage(P: GenPolyhedron, M: Sequence[Sequence[mpq]], t: Sequence[mpq]) -> GenPolyhedron:
    """``{x : M x + t in P}``."""
    if len(M) != P.dim:
        raise DimensionError("map rows must match the polyhedron dimension")
    n = len(M[0]) if M else 0
    cs = []
    for c in P.constraints:
        a = tuple(sum((c.a[i] * M[i][j] for i in range(P.dim)), ZERO) for j in range(n))
        cs.append(Constraint(a, c.rel, c.b - qn.dot(c.a, t)))
    return GenPolyhedron(n, tuple(cs))


# ---------------------------------------------------------------- projection

def _eliminate(cs: list[Constraint], j: int) -> list[Constraint]:
    """Remove variable ``j`` (column kept, zeroed) from a constraint list."""
    for k, e in enumerate(cs):
        if e.rel == EQ and e.a[j]:
            piv = e.a[j]
            out = []
            for i, c in enumerate(cs):
                if i == k:
                    continue
                f = c.a[j] / piv
                if f:
                    a = tuple(x - f * y for x, y in zip(c.a, e.a))
                    out.append(Constraint(a, c.rel, c.b - f * e.b))
                else:
                    out.append(c)
            return out
    pos, negs, rest = [], [], []
    for c in cs:
        x = c.a[j]
        (pos if x > 0 else negs if x < 0 else rest).append(c)
    for p in pos:
        for q in negs:
            cp, cq = p.a[j], -q.a[j]
            a = tuple(cq * x + cp * y for x, y in zip(p.a, q.a))
            rel = LT if LT in (p.rel, q.rel) else LE
            rest.append(Constraint(a, rel, cq * p.b + cp * q.b))
    return rest


def project(P: GenPolyhedron, keep: Sequence[int], prune: bool = True) -> GenPolyhedron:
    """Coordinate projection onto ``keep`` (in the given order) by
    Fourier-Motzkin elimination; a strict row combined with anything yields a
    strict row."""
    keep = list(keep)
    if len(set(keep)) != len(keep) or any(not 0 <= k < P.dim for k in keep):
        raise InputError(f"bad coordinate selection {keep!r}")
    if is_empty(P).empty:
        return empty(len(keep))
    cs = list(canonical(P).constraints)
    drop = [j for j in range(P.dim) if j not in keep]
    for j in drop:
        cs = _eliminate(cs, j)
        Q = canonical(GenPolyhedron(P.dim, tuple(cs)))
        if prune and len(Q.constraints) > 2:
            Q = prune_redundant(Q)
        cs = list(Q.constraints)
    out = GenPolyhedron(len(keep), tuple(Constraint(tuple(c.a[k] for k in keep), c.rel, c.b) for c in cs))
    return canonical(out)


def linear_image_fm(P: GenPolyhedron, T: Sequence[Sequence[mpq]], prune: bool = True) -> GenPolyhedron:
    """``{T x : x in P}`` for generalized ``P`` via the lifted graph."""
    m = len(T)
    for row in T:
        qn.check_dim(row, P.dim, "map row")
    n = P.dim
    lifted = embed(P, n + m, 0)
    eqs = []
    for i, row in enumerate(T):
        a = [ZERO] * (n + m)
        a[:n] = [-x for x in row]
        a[n + i] = ONE
        eqs.append(Constraint(tuple(a), EQ, ZERO))
    return project(lifted.with_constraints(eqs), list(range(n, n + m)), prune)


def minkowski_sum_fm(P: GenPolyhedron, Q: GenPolyhedron, prune: bool = True) -> GenPolyhedron:
    """``P + Q`` for generalized polyhedra: ``{z : z - y in P, y in Q}``."""
    if P.dim != Q.dim:
        raise DimensionError("dimension mismatch")
    n = P.dim
    # variables (y, z); x = z - y substituted directly
    M = [[(-ONE if j == i else ZERO) for j in range(n)] + [(ONE if j == i else ZERO) for j in range(n)] for i in range(n)]
    lifted = intersect(affine_preimage(P, M, qn.zeros(n)), embed(Q, 2 * n, 0))
    return project(lifted, list(range(n, 2 * n)), prune)


def open_segments_lifted(P: GenPolyhedron, Q: GenPolyhedron) -> GenPolyhedron:
    """Lifted form of :func:`open_segments` in variables ``(z, w, t)``; its
    projection onto ``z`` is the set of open segments.

    Lifting ``u = (1-t) x``, ``w = t y`` keeps every relation (scaling by a
    positive factor), and ``z = u + w`` lets ``u`` be substituted away.
    """
    if P.dim != Q.dim:
        raise DimensionError("dimension mismatch")
    n = P.dim
    N = 2 * n + 1
    rows = []
    for c in P.constraints:
        a = list(c.a) + [-x for x in c.a] + [c.b]
        rows.append(Constraint(tuple(a), c.rel, c.b))
    for c in Q.constraints:
        a = [ZERO] * n + list(c.a) + [-c.b]
        rows.append(Constraint(tuple(a), c.rel, ZERO))
    t = [ZERO] * (N - 1)
    rows.append(Constraint(tuple(t) + (mpq(-1),), LT, ZERO))
    rows.append(Constraint(tuple(t) + (ONE,), LT, ONE))
    return GenPolyhedron(N, tuple(rows))


def open_segments(P: GenPolyhedron, Q: GenPolyhedron, prune: bool = True) -> GenPolyhedron:
    """``{(1-t) x + t y : x in P, y in Q, 0 < t < 1}`` for generalized ``P, Q``."""
    return project(open_segments_lifted(P, Q), list(range(P.dim)), prune)


# ---------------------------------------------------------------- cones at a point

@dataclass(frozen=True)
class ConePart:
    """``cone(P - x)`` for one convex piece ``P``.

    ``closed`` is the closed cone; ``exact`` says it equals the cone itself.
    ``lifted`` holds rows ``(a, rel, s)`` meaning ``a.v rel lam * s`` so that
    ``v`` is in the cone iff ``v = 0`` or some ``lam > 0`` satisfies all rows.
    """

    closed: GenPolyhedron
    exact: bool
    lifted: tuple[tuple[Vec, str, mpq], ...]

    def contains(self, v: Sequence[mpq]) -> bool:
        return lifted_cone_contains(self.lifted, v)

    def open_part(self) -> GenPolyhedron:
        """The cone minus possibly the origin, as a generalized polyhedron."""
        n = self.closed.dim
        rows = [Constraint(tuple(a) + (-s,), rel, ZERO) for a, rel, s in self.lifted]
        rows.append(Constraint(qn.zeros(n) + (mpq(-1),), LT, ZERO))
        return project(GenPolyhedron(n + 1, tuple(rows)), list(range(n)), prune=False)


def lifted_cone_contains(lifted: Sequence[tuple[Vec, str, mpq]], v: Sequence[mpq]) -> bool:
    """Exact interval test for ``exists lam > 0`` in the lifted rows."""
    if qn.is_zero(v):
        return True
    lo, lo_open = ZERO, True
    hi, hi_open = None, False
    for a, rel, s in lifted:
        av = qn.dot(a, v)
        if rel == EQ:
            if s == 0:
                if av != 0:
                    return False
                continue
            t = av / s
            if t < lo or (t == lo and lo_open):
                return False
            if hi is not None and (t > hi or (t == hi and hi_open)):
                return False
            lo, lo_open, hi, hi_open = t, False, t, False
            continue
        strict = rel == LT
        if s == 0:
            if av > 0 or (strict and av == 0):
                return False
            continue
        t = av / s
        if s > 0:  # lam >= t
            if t > lo or (t == lo and strict and not lo_open):
                lo, lo_open = t, strict
        else:  # lam <= t
            if hi is None or t < hi or (t == hi and strict and not hi_open):
                hi, hi_open = t, strict
    if hi is None:
        return True
    if hi > lo:
        return True
    return hi == lo and not hi_open and not lo_open


def homogenize_cone(P: GenPolyhedron, xbar: Sequence[mpq], prune: bool = False) -> ConePart:
    """``cl cone(P - xbar)`` with an exactness flag and the lifted data for
    pointwise membership in ``cone(P - xbar)``.  ``P`` must be nonempty; it
    may carry strict rows."""
    n = P.dim
    qn.check_dim(xbar, n, "point")
    lifted = tuple((c.a, c.rel, c.slack(xbar)) for c in P.constraints)
    inside = P.contains(xbar)
    in_closure = all((s >= 0) if rel != EQ else (s == 0) for _, rel, s in lifted)
    if in_closure:
        rows = tuple(Constraint(a, EQ if rel == EQ else LE, ZERO) for a, rel, s in lifted if s == 0)
        closed = canonical(GenPolyhedron(n, rows))
    else:
        rows = [Constraint(tuple(a) + (-s,), EQ if rel == EQ else LE, ZERO) for a, rel, s in lifted]
        rows.append(Constraint(qn.zeros(n) + (mpq(-1),), LE, ZERO))
        closed = project(GenPolyhedron(n + 1, tuple(rows)), list(range(n)), prune=prune)
    return ConePart(closed, inside, lifted)


def pointwise_cone_membership(P: GenPolyhedron, xbar: Sequence[object], v: Sequence[object]) -> bool:
    """``v in cone(P - xbar)`` literally (origin included)."""
    xbar, v = qn.vec(xbar), qn.vec(v)
    qn.check_dim(xbar, P.dim, "point")
    qn.check_dim(v, P.dim, "direction")
    lifted = tuple((c.a, c.rel, c.slack(xbar)) for c in P.constraints)
    return lifted_cone_contains(lifted, v)


# ---------------------------------------------------------------- unions

@dataclass(frozen=True)
class UnionSet:
    """Finite union of generalized polyhedra; empty pieces are dropped."""

    dim: int
    pieces: tuple[GenPolyhedron, ...]

    def __post_init__(self) -> None:
        ps = tuple(self.pieces)
        for p in ps:
            if not isinstance(p, GenPolyhedron):
                raise InputError("pieces must be GenPolyhedron values")
            if p.dim != self.dim:
                raise DimensionError(f"piece of dimension {p.dim} in a union of dimension {self.dim}")
        object.__setattr__(self, "pieces", tuple(p for p in ps if nonempty(p)))

    @classmethod
    def single(cls, P: GenPolyhedron) -> "UnionSet":
        return cls(P.dim, (P,))

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    def contains(self, x: Sequence[mpq]) -> bool:
        qn.check_dim(x, self.dim, "point")
        return any(p.contains(x) for p in self.pieces)

    def closures(self) -> tuple[GenPolyhedron, ...]:
        return tuple(closure(p) for p in self.pieces)

    def require_nonempty(self) -> None:
        if not self.pieces:
            raise EmptySetError("the union has no nonempty pieces")


def union_affine_hull(S: UnionSet) -> AffineFlat:
    S.require_nonempty()
    flats = [affine_hull(p) for p in S.pieces]
    p0 = flats[0].basepoint
    dirs = [v for f in flats for v in f.basis]
    dirs += [qn.sub(f.basepoint, p0) for f in flats[1:]]
    return make_flat(p0, dirs)


# ---------------------------------------------------------------- JSON

def poly_to_json(P: GenPolyhedron) -> dict:
    return {
        "dim": P.dim,
        "constraints": [{"a": qn.fmt_vec(c.a), "rel": c.rel, "b": qn.fmt(c.b)} for c in P.constraints],
    }


def _int_field(d: dict, key: str) -> int:
    v = d.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise InputError(f"field {key!r} must be a nonnegative integer")
    return v


def poly_from_json(d: object) -> GenPolyhedron:
    if not isinstance(d, dict) or set(d) - {"dim", "constraints"}:
        raise InputError("polyhedron must be an object with keys dim, constraints")
    n = _int_field(d, "dim")
    rows = d.get("constraints", [])
    if not isinstance(rows, list):
        raise InputError("constraints must be a list")
    cs = []
    for r in rows:
        if not isinstance(r, dict) or set(r) != {"a", "rel", "b"}:
            raise InputError(f"bad constraint {r!r}")
        if not isinstance(r["a"], list):
            raise InputError("constraint normal must be a list")
        if r["rel"] not in qn.RELATIONS:
            raise InputError(f"unknown relation {r['rel']!r}")
        a = tuple(_json_rat(x) for x in r["a"])
        cs.append(Constraint(a, r["rel"], _json_rat(r["b"])))
    return GenPolyhedron(n, tuple(cs))


def _json_rat(x: object) -> mpq:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise InputError(f"rationals are strings or integers, got {x!r}")
    return rat(x)


def union_to_json(S: UnionSet) -> dict:
    return {"dim": S.dim, "pieces": [poly_to_json(p) for p in S.pieces]}


def union_from_json(d: object) -> UnionSet:
    if not isinstance(d, dict) or set(d) - {"dim", "pieces"}:
        raise InputError("union must be an object with keys dim, pieces")
    n = _int_field(d, "dim")
    ps = d.get("pieces")
    if not isinstance(ps, list) or not ps:
        raise InputError("pieces must be a nonempty list")
    return UnionSet(n, tuple(poly_from_json(p) for p in ps))


def points_from_json(xs: object, n: int | None = None) -> tuple[Vec, ...]:
    if not isinstance(xs, list):
        raise InputError("expected a list of points")
    out = []
    for x in xs:
        if not isinstance(x, list):
            raise InputError("a point is a list of rationals")
        v = tuple(_json_rat(t) for t in x)
        if n is not None:
            qn.check_dim(v, n, "point")
        out.append(v)
    return tuple(out)
