"""Double description conversion between constraint and generator form for
closed polyhedra, and the generator-based set operations built on it."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import budget
from . import exactnum as qn
from .errors import DimensionError, InputError, ResourceError
from .exactnum import EQ, LE, ONE, ZERO, Vec, mpq
from .genpoly import Constraint, GenPolyhedron, canonical, empty, is_empty


@dataclass(frozen=True)
class GeneratorSet:
    """``conv(points) + cone(rays) + span(lines)``; no points means empty."""

    dim: int
    points: tuple[Vec, ...]
    rays: tuple[Vec, ...] = ()
    lines: tuple[Vec, ...] = ()

    def __post_init__(self) -> None:
        for group in (self.points, self.rays, self.lines):
            for v in group:
                qn.check_dim(v, self.dim, "generator")

    @property
    def is_empty(self) -> bool:
        return not self.points

    def directions(self) -> list[Vec]:
        return list(self.rays) + list(self.lines) + [qn.neg(l) for l in self.lines]


def _reduce_mod(v: Sequence[mpq], R: list[list[mpq]], piv: list[int]) -> Vec:
    x = list(v)
    for row, p in zip(R, piv):
        f = x[p]
        if f:
            x = [xi - f * ri for xi, ri in zip(x, row)]
    return tuple(x)


def canonical_generators(G: GeneratorSet) -> GeneratorSet:
    """Lines as an echelon basis; points and rays reduced modulo the lines,
    rays made primitive; duplicates removed and everything sorted.  Does not
    remove non-extreme generators (see :func:`minimal_generators`)."""
    n = G.dim
    if not G.points:
        return GeneratorSet(n, ())
    lines = qn.canonical_basis(list(G.lines), n)
    R, piv = qn.rref(lines, n) if lines else ([], [])
    pts = sorted({_reduce_mod(p, R, piv) for p in G.points})
    rays = set()
    for r in G.rays:
        r2 = _reduce_mod(r, R, piv)
        if not qn.is_zero(r2):
            rays.add(qn.primitive(r2))
    return GeneratorSet(n, tuple(pts), tuple(sorted(rays)), lines)


# ---------------------------------------------------------------- cone double description

def _cone_dd(ineqs: Sequence[Vec], eqs: Sequence[Vec], d: int) -> tuple[list[Vec], list[Vec]]:
    """Generators of ``{y in Q^d : m.y <= 0, e.y = 0}``: (extreme rays, lineality basis).

    Incremental double description with lineality kept separately and the
    combinatorial adjacency test on zero sets.
    """
    cap = budget.current().gens
    lin = list(qn.nullspace(list(eqs), d)) if eqs else [qn.unit(d, i) for i in range(d)]
    rays: list[Vec] = []
    zs: list[int] = []  # bitmask of processed inequalities tight at each ray
    for k, m in enumerate(ineqs):
        bit = 1 << k
        vals = [qn.dot(m, l) for l in lin]
        j = next((i for i, v in enumerate(vals) if v), None)
        if j is not None:
            l0, c0 = lin[j], vals[j]
            new_lin = []
            for i, l in enumerate(lin):
                if i != j:
                    f = vals[i] / c0
                    new_lin.append(qn.sub(l, qn.scale(f, l0)) if f else l)
            new_rays = []
            for r in rays:
                f = qn.dot(m, r) / c0
                new_rays.append(qn.primitive(qn.sub(r, qn.scale(f, l0))) if f else r)
            r0 = qn.primitive(qn.neg(l0) if c0 > 0 else l0)
            lin = new_lin
            rays = new_rays + [r0]
            # old rays become tight at m; r0 is tight on all earlier rows
            # because those vanish on the lineality space
            zs = [z | bit for z in zs] + [bit - 1]
            continue
        vals = [qn.dot(m, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        if not pos:
            zs = [z | bit if vals[i] == 0 else z for i, z in enumerate(zs)]
            continue
        new_rays = [rays[i] for i in zero] + [rays[i] for i in neg]
        new_zs = [zs[i] | bit for i in zero] + [zs[i] for i in neg]
        for p in pos:
            for q in neg:
                common = zs[p] & zs[q]
                adjacent = True
                for t in range(len(rays)):
                    if t != p and t != q and (zs[t] & common) == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                r = qn.primitive(qn.sub(qn.scale(vals[p], rays[q]), qn.scale(vals[q], rays[p])))
                new_rays.append(r)
                new_zs.append(common | bit)
                if len(new_rays) > cap:
                    raise ResourceError(f"double description exceeded {cap} generators")
        rays, zs = new_rays, new_zs
        if len(rays) > cap:
            raise ResourceError(f"double description exceeded {cap} generators")
    return rays, lin


def _check_dim(n: int) -> None:
    cap = budget.current().max_dim
    if n > cap:
        raise ResourceError(f"dimension {n} exceeds the double description cap {cap}")


def to_generators(P: GenPolyhedron) -> GeneratorSet:
    """Vertices/minimal-face points, extreme rays and lineality of a closed
    polyhedron."""
    if not P.is_closed:
        raise InputError("generator form is defined for closed polyhedra only")
    n = P.dim
    _check_dim(n)
    P = canonical(P)
    if len(P.constraints) == 1 and qn.is_zero(P.constraints[0].a) and P.constraints[0].b < 0:
        return GeneratorSet(n, ())
    ineqs = [tuple(c.a) + (-c.b,) for c in P.constraints if c.rel == LE]
    ineqs.append(qn.zeros(n) + (mpq(-1),))
    eqs = [tuple(c.a) + (-c.b,) for c in P.constraints if c.rel == EQ]
    rays, lin = _cone_dd(ineqs, eqs, n + 1)
    points, dirs = [], []
    for r in rays:
        t = r[n]
        if t > 0:
            points.append(tuple(x / t for x in r[:n]))
        else:
            dirs.append(r[:n])
    lines = [l[:n] for l in lin]
    return canonical_generators(GeneratorSet(n, tuple(points), tuple(dirs), tuple(lines)))


def convex_hull(G: GeneratorSet) -> GenPolyhedron:
    """Facet description of ``conv(points) + cone(rays) + span(lines)``."""
    n = G.dim
    _check_dim(n)
    if not G.points:
        return empty(n)
    ineqs = [tuple(p) + (ONE,) for p in G.points] + [tuple(r) + (ZERO,) for r in G.rays]
    eqs = [tuple(l) + (ZERO,) for l in G.lines]
    rays, lin = _cone_dd(ineqs, eqs, n + 1)
    # polar rays y = (a, -b) give a.x - b <= 0
    cs = []
    for y in rays:
        a, b = y[:n], -y[n]
        if qn.is_zero(a):
            continue  # the homogenizing t >= 0 row
        cs.append(Constraint(a, LE, b))
    for y in lin:
        cs.append(Constraint(y[:n], EQ, -y[n]))
    return canonical(GenPolyhedron(n, tuple(cs)))


def minimal_generators(G: GeneratorSet) -> GeneratorSet:
    """Drop redundant generators by a round trip through facet form."""
    return to_generators(convex_hull(G))


def generators_of_union(polys: Iterable[GenPolyhedron], n: int) -> GeneratorSet:
    """Generators of the closed convex hull of a union of polyhedra (each
    replaced by its closure)."""
    from .genpoly import closure

    pts, rays, lines = [], [], []
    for P in polys:
        G = to_generators(closure(P))
        if G.is_empty:
            continue
        pts += G.points
        rays += G.rays
        lines += G.lines
    return canonical_generators(GeneratorSet(n, tuple(pts), tuple(rays), tuple(lines)))


def hull_of_union(polys: Sequence[GenPolyhedron], n: int) -> GenPolyhedron:
    return convex_hull(generators_of_union(polys, n))


# ---------------------------------------------------------------- generator-based operations

def image_generators(G: GeneratorSet, T: Sequence[Sequence[mpq]]) -> GeneratorSet:
    m = len(T)
    for row in T:
        qn.check_dim(row, G.dim, "map row")
    f = lambda v: qn.matvec(T, v)
    return canonical_generators(GeneratorSet(
        m, tuple(f(p) for p in G.points), tuple(f(r) for r in G.rays), tuple(f(l) for l in G.lines)))


def sum_generators(G: GeneratorSet, H: GeneratorSet) -> GeneratorSet:
    if G.dim != H.dim:
        raise DimensionError("dimension mismatch")
    pts = tuple(qn.add(p, q) for p in G.points for q in H.points)
    return canonical_generators(GeneratorSet(G.dim, pts, G.rays + H.rays, G.lines + H.lines))


def negate_generators(G: GeneratorSet) -> GeneratorSet:
    return canonical_generators(GeneratorSet(
        G.dim, tuple(qn.neg(p) for p in G.points), tuple(qn.neg(r) for r in G.rays), G.lines))


def linear_image(P: GenPolyhedron, T: Sequence[Sequence[mpq]]) -> GenPolyhedron:
    return convex_hull(image_generators(to_generators(P), T))


def minkowski_sum(P: GenPolyhedron, Q: GenPolyhedron) -> GenPolyhedron:
    return convex_hull(sum_generators(to_generators(P), to_generators(Q)))


def negate(P: GenPolyhedron) -> GenPolyhedron:
    return convex_hull(negate_generators(to_generators(P)))


# ---------------------------------------------------------------- JSON

def generators_to_json(G: GeneratorSet) -> dict:
    return {
        "points": [qn.fmt_vec(p) for p in G.points],
        "rays": [qn.fmt_vec(r) for r in G.rays],
        "lines": [qn.fmt_vec(l) for l in G.lines],
    }


def generators_from_json(d: object, dim: int | None = None) -> GeneratorSet:
    from .genpoly import points_from_json

    if not isinstance(d, dict) or set(d) - {"points", "rays", "lines", "dim"}:
        raise InputError("generator set must be an object with keys points, rays, lines")
    groups = [points_from_json(d.get(k, [])) for k in ("points", "rays", "lines")]
    n = d.get("dim", dim)
    if n is None:
        lens = {len(v) for g in groups for v in g}
        if len(lens) != 1:
            raise InputError("cannot infer the dimension of the generator set")
        n = lens.pop()
    return GeneratorSet(n, *groups)
