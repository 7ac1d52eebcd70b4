"""Brute-force oracle for bounded unions in dimension one or two.

Nothing here uses linear programming, covering or double description.
Membership is direct row evaluation over ``fractions.Fraction``.  Cone
membership of a direction is an exact ray test: the ray ``x + t d, t > 0``
meets a piece iff the per-row intervals in ``t`` intersect on ``t > 0``.  In
the plane, membership of a polyhedral cone union is constant on the open
sectors between critical directions (towards vertices, along facets), so
testing the critical directions, one direction inside every sector and a
few small grid directions decides subspace questions exactly.  The
membership grid has step ``1/resolution``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from ..dd import to_generators
from ..errors import InputError
from ..genpoly import UnionSet, closure

Rows = list[tuple[tuple[Fraction, ...], str, Fraction]]


def _rows(P) -> Rows:
    return [(tuple(Fraction(int(a.numerator), int(a.denominator)) for a in c.a), c.rel,
             Fraction(int(c.b.numerator), int(c.b.denominator))) for c in P.constraints]


def _fr(v: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(t.numerator), int(t.denominator)) for t in v)


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _holds(rows: Rows, x) -> bool:
    for a, rel, b in rows:
        v = _dot(a, x)
        if rel == "<=" and not v <= b or rel == "<" and not v < b or rel == "=" and v != b:
            return False
    return True


def _relax(rows: Rows) -> Rows:
    return [(a, "<=" if rel == "<" else rel, b) for a, rel, b in rows]


def _ray_hits(rows: Rows, x, d) -> bool:
    """Some ``t > 0`` with ``x + t d`` satisfying every row."""
    lo, lo_open = Fraction(0), True
    hi, hi_open = None, False
    for a, rel, b in rows:
        s, r = _dot(a, d), b - _dot(a, x)
        if s == 0:
            if rel == "<=" and r < 0 or rel == "<" and r <= 0 or rel == "=" and r != 0:
                return False
            continue
        t = r / s
        if rel == "=":
            if t < lo or (t == lo and lo_open) or (hi is not None and (t > hi or t == hi and hi_open)):
                return False
            lo, lo_open, hi, hi_open = t, False, t, False
            continue
        strict = rel == "<"
        if s > 0:  # t <= r/s
            if hi is None or t < hi or (t == hi and strict):
                hi, hi_open = t, strict
        else:  # t >= r/s
            if t > lo or (t == lo and strict):
                lo, lo_open = t, strict
    if hi is None:
        return True
    return lo < hi or (lo == hi and not lo_open and not hi_open)


def _perp(a):
    return (-a[1], a[0])


def _primitive(v):
    den = math.lcm(*(t.denominator for t in v))
    ints = [int(t * den) for t in v]
    g = math.gcd(*ints)
    return tuple(Fraction(t // g) for t in ints) if g else tuple(Fraction(0) for _ in v)


class BruteOracle:
    def __init__(self, S: UnionSet, resolution: int = 8) -> None:
        if S.dim > 2:
            raise InputError("the brute-force oracle handles dimension one or two")
        self.S = S
        self.n = S.dim
        self.res = resolution
        self.rows = [_rows(P) for P in S.pieces]
        self.crows = [_relax(r) for r in self.rows]
        self.verts = []
        for P in S.pieces:
            G = to_generators(closure(P))
            if G.rays or G.lines:
                raise InputError("the brute-force oracle needs bounded pieces")
            self.verts += [_fr(v) for v in G.points]
        self.normals = [a for rows in self.rows for a, _, _ in rows if any(a)]

    # ------------------------------------------------------------ membership
    def contains(self, x) -> bool:
        x = _fr(x)
        return any(_holds(r, x) for r in self.rows)

    def grid(self) -> list[tuple[Fraction, ...]]:
        """Grid of step ``1/resolution`` over the bounding box, one step wider."""
        h = Fraction(1, self.res)
        lo = [min(v[i] for v in self.verts) - h for i in range(self.n)]
        hi = [max(v[i] for v in self.verts) + h for i in range(self.n)]
        axes = []
        for i in range(self.n):
            a = math.floor(lo[i] * self.res)
            b = math.ceil(hi[i] * self.res)
            axes.append([Fraction(k, self.res) for k in range(a, b + 1)])
        if self.n == 1:
            return [(t,) for t in axes[0]]
        return [(s, t) for s in axes[0] for t in axes[1]]

    # ------------------------------------------------------------ directions
    def _directions(self, x, local: bool) -> list[tuple[Fraction, ...]]:
        if self.n == 1:
            return [(Fraction(1),), (Fraction(-1),)]
        crit = set()
        for a in self.normals:
            crit.add(_primitive(_perp(a)))
        if not local:
            for v in self.verts:
                d = tuple(p - q for p, q in zip(v, x))
                if any(d):
                    crit.add(_primitive(d))
        crit |= {tuple(-t for t in d) for d in crit}
        r = 2
        for i in range(-r, r + 1):
            for j in range(-r, r + 1):
                if (i or j) and math.gcd(i, j) == 1:
                    crit.add((Fraction(i), Fraction(j)))
        ordered = sorted(crit, key=lambda d: math.atan2(d[1], d[0]))
        out = list(ordered)
        # one direction strictly inside every sector between neighbours (the
        # grid directions keep every sector narrower than a half-turn)
        for k, d in enumerate(ordered):
            e = ordered[(k + 1) % len(ordered)]
            out.append(_primitive((d[0] + e[0], d[1] + e[1])))
        return sorted(set(out))

    def _local_step(self, x, dirs) -> Fraction:
        """A step after which no row changes its status along any of ``dirs``
        (inactive rows stay inactive, violated rows stay violated)."""
        big = max((max(abs(t) for t in d) for d in dirs), default=Fraction(1))
        h = Fraction(1)
        for rows in self.rows:
            for a, _, b in rows:
                s = b - _dot(a, x)
                if s != 0:
                    h = min(h, abs(s) / (2 * big * sum(abs(t) for t in a)))
        return h

    def _span_rank(self, dirs) -> int:
        if not dirs:
            return 0
        if self.n == 1:
            return 1
        d0 = dirs[0]
        return 2 if any(d0[0] * d[1] - d0[1] * d[0] for d in dirs) else 1

    def _aff_dirs(self):
        base = self.verts[0]
        return [tuple(p - q for p, q in zip(v, base)) for v in self.verts if v != base]

    def _is_subspace(self, hit) -> bool:
        """``hit`` is the set of tested directions in the cone; the cone
        (always containing 0) is a subspace iff every tested direction of its
        span is hit."""
        rank = self._span_rank(list(hit))
        if rank == 0:
            return True
        if rank == self.n:
            return len(hit) == len(self._all)
        d0 = next(iter(hit))
        neg = tuple(-t for t in d0)
        return all(self._parallel(d, d0) for d in hit) and neg in hit

    @staticmethod
    def _parallel(d, e) -> bool:
        return len(d) == 1 or d[0] * e[1] - d[1] * e[0] == 0

    # ------------------------------------------------------------ verdicts
    def verdicts(self, x) -> dict[str, bool]:
        x = _fr(x)
        kinds = ("rint", "ri", "qi", "sqri", "iri", "qri")
        if not self.contains(x):
            return {k: False for k in kinds}
        self._all = self._directions(x, local=False)
        dirs = self._all
        cone = {d for d in dirs if any(_ray_hits(r, x, d) for r in self.rows)}
        ccone = {d for d in dirs if any(_ray_hits(r, x, d) for r in self.crows)}
        iri = self._is_subspace(cone)
        qri = self._is_subspace(ccone)
        qi = len(ccone) == len(dirs)
        # local: x + h d for h below every inactive slack
        aff = self._aff_dirs()
        arank = self._span_rank(aff)
        if arank == 0:
            test = []
        elif arank == self.n:
            test = self._directions(x, local=True)
        else:
            u = _primitive(aff[0])
            test = [u, tuple(-t for t in u)]
        h = self._local_step(x, test)
        ri = all(self.contains(tuple(p + h * q for p, q in zip(x, d))) for d in test)
        return {"rint": ri, "ri": ri, "qi": qi, "sqri": iri, "iri": iri, "qri": qri}
