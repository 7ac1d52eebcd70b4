"""Exact rational arithmetic and an exact simplex solver.

Scalars are ``gmpy2.mpq``; vectors are tuples of them and matrices are tuples
of row tuples.  Nothing in the kernel ever touches a float.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import gmpy2
from gmpy2 import mpq

from .errors import DimensionError, InputError

Rat = type(mpq())
Vec = tuple
ZERO = mpq(0)
ONE = mpq(1)

LE, LT, EQ = "<=", "<", "="
RELATIONS = (LE, LT, EQ)


# ---------------------------------------------------------------- scalars

def rat(x: object) -> mpq:
    """Coerce ``x`` to an exact rational; strings use the ``"p/q"`` form."""
    if isinstance(x, Rat):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        num, sep, den = s.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise InputError(f"not a rational: {x!r}") from None
        if q == 0:
            raise InputError(f"zero denominator in {x!r}")
        return mpq(p, q)
    if type(x).__name__ == "mpz":
        return mpq(x)
    raise InputError(f"not a rational: {x!r}")


def fmt(q: mpq) -> str:
    """Serialize a rational as ``"p/q"`` or a plain integer string."""
    return str(q)


def vec(xs: Iterable[object]) -> Vec:
    return tuple(rat(x) for x in xs)


def parse_point(text: str) -> Vec:
    """Parse a comma-separated list of rationals, e.g. ``"1/2,0"``."""
    items = [t for t in text.split(",")]
    if not text.strip() or any(not t.strip() for t in items):
        raise InputError(f"bad point {text!r}")
    return vec(items)


def fmt_vec(v: Sequence[mpq]) -> list[str]:
    return [fmt(x) for x in v]


# ---------------------------------------------------------------- vectors

def zeros(n: int) -> Vec:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vec:
    return tuple(ONE if j == i else ZERO for j in range(n))


def check_dim(v: Sequence, n: int, what: str = "vector") -> None:
    if len(v) != n:
        raise DimensionError(f"{what} has length {len(v)}, expected {n}")


def dot(u: Sequence[mpq], v: Sequence[mpq]) -> mpq:
    if len(u) != len(v):
        raise DimensionError(f"dot of lengths {len(u)} and {len(v)}")
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def add(u: Sequence[mpq], v: Sequence[mpq]) -> Vec:
    if len(u) != len(v):
        raise DimensionError(f"add of lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[mpq], v: Sequence[mpq]) -> Vec:
    if len(u) != len(v):
        raise DimensionError(f"sub of lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(c: mpq, v: Sequence[mpq]) -> Vec:
    return tuple(c * a for a in v)


def neg(v: Sequence[mpq]) -> Vec:
    return tuple(-a for a in v)


def is_zero(v: Sequence[mpq]) -> bool:
    return not any(v)


def lincomb(coeffs: Sequence[mpq], vectors: Sequence[Vec], n: int) -> Vec:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(v):
                if x:
                    out[j] += c * x
    return tuple(out)


def matvec(A: Sequence[Sequence[mpq]], v: Sequence[mpq]) -> Vec:
    return tuple(dot(row, v) for row in A)


def primitive(v: Sequence[mpq]) -> Vec:
    """Positive rescaling of ``v`` to a coprime integer vector (zero stays zero)."""
    den = 1
    for x in v:
        if x:
            den = gmpy2.lcm(den, x.denominator)
    ints = [x.numerator * (den // x.denominator) for x in v]
    g = 0
    for k in ints:
        if k:
            g = gmpy2.gcd(g, k)
    if g == 0:
        return tuple(ZERO for _ in v)
    return tuple(mpq(k // g) for k in ints)


def sign_normalized(v: Sequence[mpq]) -> Vec:
    """Primitive form with a positive leading nonzero entry."""
    p = primitive(v)
    for x in p:
        if x:
            return p if x > 0 else neg(p)
    return p


# ---------------------------------------------------------------- linear algebra

def rref(rows: Sequence[Sequence[mpq]], ncols: int | None = None) -> tuple[list[list[mpq]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        if piv != 1:
            M[r] = [x / piv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence[mpq]]) -> int:
    return len(rref(rows)[0]) if rows else 0


@dataclass(frozen=True)
class LinearSolution:
    solution: Vec | None
    nullspace: tuple[Vec, ...]
    rank: int


def nullspace(A: Sequence[Sequence[mpq]], n: int) -> tuple[Vec, ...]:
    """Canonical basis of ``{x : A x = 0}``: rows of an RREF matrix."""
    R, piv = rref(A, n) if A else ([], [])
    free = [j for j in range(n) if j not in piv]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = ONE
        for row, p in zip(R, piv):
            x[p] = -row[f]
        basis.append(tuple(x))
    return canonical_basis(basis, n)


def canonical_basis(vectors: Sequence[Sequence[mpq]], n: int) -> tuple[Vec, ...]:
    """Unique basis of span(vectors): primitive integer rows of its RREF."""
    if not vectors:
        return ()
    R, _ = rref(vectors, n)
    return tuple(sign_normalized(r) for r in R)


def solve_linear(A: Sequence[Sequence[object]], b: Sequence[object]) -> LinearSolution:
    """Solve ``A x = b`` exactly.

    Returns one particular solution (free variables set to zero) or ``None``
    when inconsistent, a canonical nullspace basis, and the rank of ``A``.
    The column count is taken from the first row; a zero-row ``A`` has no
    columns unless ``b`` is empty as well, so callers with no equations should
    use :func:`nullspace` directly.
    """
    A = [vec(r) for r in A]
    b = vec(b)
    if len(A) != len(b):
        raise DimensionError(f"{len(A)} rows but rhs of length {len(b)}")
    if not A:
        return LinearSolution((), (), 0)
    n = len(A[0])
    for r in A:
        check_dim(r, n, "matrix row")
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    R, piv = rref(aug, n + 1)
    rk = sum(1 for p in piv if p < n)
    ns = nullspace(A, n)
    if n in piv:
        return LinearSolution(None, ns, rk)
    x = [ZERO] * n
    for row, p in zip(R, piv):
        x[p] = row[n]
    return LinearSolution(tuple(x), ns, rk)


def orth_complement(basis: Sequence[Sequence[mpq]], n: int) -> tuple[Vec, ...]:
    """Basis of the orthogonal complement of span(basis) in Q^n."""
    if not basis:
        return tuple(unit(n, i) for i in range(n))
    return nullspace(basis, n)


# ---------------------------------------------------------------- linear programming

@dataclass(frozen=True)
class LPProblem:
    """``max``/``min`` of ``objective . x`` over free ``x`` subject to rows
    ``(a, rel, b)`` with ``rel`` in ``{"<=", "="}``."""

    objective: Vec
    constraints: tuple[tuple[Vec, str, mpq], ...]
    sense: str = "max"

    @property
    def dim(self) -> int:
        return len(self.objective)

    def validate(self) -> None:
        if self.sense not in ("max", "min"):
            raise InputError(f"unknown sense {self.sense!r}")
        n = self.dim
        for a, rel, _ in self.constraints:
            check_dim(a, n, "constraint row")
            if rel not in (LE, EQ):
                raise InputError(f"LP relation must be <= or =, got {rel!r}")


@dataclass(frozen=True)
class LPOutcome:
    """Result with certificate.

    ``optimal``: ``duals`` satisfy ``A^T y = c``, ``b . y = value`` and
    ``y_i >= 0`` (max) / ``<= 0`` (min) on inequality rows.
    ``infeasible``: ``duals`` is a Farkas vector, ``A^T y = 0``, ``b . y < 0``,
    ``y_i >= 0`` on inequality rows.
    ``unbounded``: ``point`` is feasible and ``ray`` is a recession direction
    improving the objective.
    """

    status: str
    point: Vec | None = None
    value: mpq | None = None
    duals: Vec | None = None
    ray: Vec | None = None


def _pivot(T: list[list[mpq]], r: list[mpq], basis: list[int], row: int, col: int) -> None:
    prow = T[row]
    piv = prow[col]
    if piv != 1:
        inv = 1 / piv
        prow = [x * inv if x else x for x in prow]
        T[row] = prow
    nz = [(j, x) for j, x in enumerate(prow) if x]
    for i, trow in enumerate(T):
        if i != row:
            f = trow[col]
            if f:
                for j, x in nz:
                    trow[j] -= f * x
    f = r[col]
    if f:
        for j, x in nz:
            r[j] -= f * x
    basis[row] = col


def _run(T: list[list[mpq]], r: list[mpq], basis: list[int], allowed: list[int]) -> int | None:
    """Bland's-rule primal simplex on a maximization tableau.

    ``T`` rows end with the rhs; ``r`` holds reduced costs (last entry unused).
    Returns ``None`` at optimality or the entering column proving unboundedness.
    """
    rhs = len(T[0]) - 1 if T else 0
    while True:
        col = next((j for j in allowed if r[j] > 0), None)
        if col is None:
            return None
        best = None
        for i, trow in enumerate(T):
            a = trow[col]
            if a > 0:
                ratio = trow[rhs] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return col
        _pivot(T, r, basis, best[1], col)


def lp_solve(p: LPProblem) -> LPOutcome:
    """Solve an LP exactly with a two-phase tableau simplex (Bland's rule)."""
    p.validate()
    n = p.dim
    cons = p.constraints
    m = len(cons)
    c = p.objective if p.sense == "max" else neg(p.objective)

    n_le = sum(1 for _, rel, _ in cons if rel == LE)
    slack_col = {}
    k = 2 * n
    for i, (_, rel, _) in enumerate(cons):
        if rel == LE:
            slack_col[i] = k
            k += 1
    signs = []
    ident = []
    art_cols = []
    for i, (_, rel, b) in enumerate(cons):
        s = -1 if b < 0 else 1
        signs.append(s)
        if rel == LE and s == 1:
            ident.append(slack_col[i])
        else:
            ident.append(k)
            art_cols.append(k)
            k += 1
    ncol = k
    T = []
    for i, (a, rel, b) in enumerate(cons):
        s = signs[i]
        row = [ZERO] * (ncol + 1)
        for j, x in enumerate(a):
            if x:
                row[j] = s * x
                row[n + j] = -s * x
        if rel == LE:
            row[slack_col[i]] = mpq(s)
        if ident[i] != slack_col.get(i):
            row[ident[i]] = ONE
        row[ncol] = s * b
        T.append(row)
    basis = list(ident)
    art = set(art_cols)
    non_art = [j for j in range(ncol) if j not in art]

    # phase 1: maximize -sum(artificials)
    if art_cols:
        cost1 = [ZERO] * (ncol + 1)
        for j in art_cols:
            cost1[j] = -ONE
        r = list(cost1)
        for i, bcol in enumerate(basis):
            cb = cost1[bcol]
            if cb:
                for j, x in enumerate(T[i]):
                    if x:
                        r[j] -= cb * x
        _run(T, r, basis, non_art)
        infeas = sum((T[i][ncol] for i, b in enumerate(basis) if b in art), ZERO)
        if infeas > 0:
            y = []
            for i in range(m):
                pi = cost1[ident[i]] - r[ident[i]]
                y.append(signs[i] * pi)
            return LPOutcome("infeasible", duals=tuple(y))
        for i in range(m):
            if basis[i] in art:
                col = next((j for j in non_art if T[i][j]), None)
                if col is not None:
                    _pivot(T, r, basis, i, col)

    cost2 = [ZERO] * (ncol + 1)
    for j, x in enumerate(c):
        cost2[j] = x
        cost2[n + j] = -x
    r = list(cost2)
    for i, bcol in enumerate(basis):
        cb = cost2[bcol]
        if cb:
            for j, x in enumerate(T[i]):
                if x:
                    r[j] -= cb * x
    enter = _run(T, r, basis, non_art)

    xp = [ZERO] * ncol
    for i, bcol in enumerate(basis):
        xp[bcol] = T[i][ncol]
    x = tuple(xp[j] - xp[n + j] for j in range(n))
    if enter is not None:
        dp = [ZERO] * ncol
        dp[enter] = ONE
        for i, bcol in enumerate(basis):
            dp[bcol] = -T[i][enter]
        d = tuple(dp[j] - dp[n + j] for j in range(n))
        return LPOutcome("unbounded", point=x, ray=d)
    y = tuple(signs[i] * (cost2[ident[i]] - r[ident[i]]) for i in range(m))
    val = dot(p.objective, x)
    if p.sense == "min":
        y = neg(y)
    return LPOutcome("optimal", point=x, value=val, duals=y)


def verify_outcome(p: LPProblem, out: LPOutcome) -> bool:
    """Re-check an outcome's certificate by direct substitution."""
    n = p.dim
    rows = p.constraints

    def feasible(x: Vec) -> bool:
        return all((dot(a, x) <= b) if rel == LE else (dot(a, x) == b) for a, rel, b in rows)

    if out.status == "optimal":
        y = out.duals
        if out.point is None or y is None or not feasible(out.point):
            return False
        sgn = 1 if p.sense == "max" else -1
        if any(rel == LE and sgn * yi < 0 for (_, rel, _), yi in zip(rows, y)):
            return False
        aty = lincomb(y, [a for a, _, _ in rows], n)
        if aty != tuple(p.objective):
            return False
        return dot([b for _, _, b in rows], y) == out.value == dot(p.objective, out.point)
    if out.status == "infeasible":
        y = out.duals
        if y is None or any(rel == LE and yi < 0 for (_, rel, _), yi in zip(rows, y)):
            return False
        if not is_zero(lincomb(y, [a for a, _, _ in rows], n)):
            return False
        return dot([b for _, _, b in rows], y) < 0
    if out.status == "unbounded":
        d = out.ray
        if out.point is None or d is None or not feasible(out.point):
            return False
        ok = all((dot(a, d) <= 0) if rel == LE else (dot(a, d) == 0) for a, rel, _ in rows)
        gain = dot(p.objective, d)
        return ok and (gain > 0 if p.sense == "max" else gain < 0)
    return False


# ---------------------------------------------------------------- strict systems

@dataclass(frozen=True)
class StrictResult:
    feasible: bool
    witness: Vec | None
    outcome: LPOutcome


def strict_feasibility(constraints: Sequence[tuple[Sequence[mpq], str, mpq]], dim: int | None = None) -> StrictResult:
    """Decide whether a mixed ``<= / < / =`` system has a solution.

    Strict rows are shifted by a margin ``eps`` which is maximized subject to
    ``eps <= 1``; the system is feasible iff the optimal margin is positive.
    """
    if dim is None:
        if not constraints:
            raise InputError("dimension required for an empty system")
        dim = len(constraints[0][0])
    rows = []
    strict = False
    for a, rel, b in constraints:
        check_dim(a, dim, "constraint row")
        if rel not in RELATIONS:
            raise InputError(f"unknown relation {rel!r}")
        strict = strict or rel == LT
    if not strict:
        rows = tuple((tuple(a), rel, b) for a, rel, b in constraints)
        out = lp_solve(LPProblem(zeros(dim), rows))
        if out.status == "infeasible":
            return StrictResult(False, None, out)
        return StrictResult(True, out.point, out)
    for a, rel, b in constraints:
        if rel == LT:
            rows.append((tuple(a) + (ONE,), LE, b))
        else:
            rows.append((tuple(a) + (ZERO,), rel, b))
    rows.append((zeros(dim) + (ONE,), LE, ONE))
    out = lp_solve(LPProblem(zeros(dim) + (ONE,), tuple(rows)))
    if out.status != "optimal" or out.value <= 0:
        return StrictResult(False, None, out)
    return StrictResult(True, out.point[:dim], out)
