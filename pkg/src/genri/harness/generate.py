"""Seeded random instances and structured witness points."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .. import exactnum as qn
from ..dd import GeneratorSet, convex_hull, to_generators
from ..errors import InputError, ResourceError
from ..exactnum import EQ, LE, LT, ZERO, Vec, mpq
from ..genpoly import (
    Constraint, GenPolyhedron, UnionSet, affine_hull, closure, embed, nonempty, ri_representation,
    universe,
)
from ..setmap import PLConvexFunction, SetMap, epi_of

KINDS = ("polyhedron", "union", "nearly_convex", "convex_map", "nc_map", "pl_function")
MAX_TRIES = 200


@dataclass(frozen=True)
class InstanceSpec:
    seed: int
    dim: int = 2
    pieces: int = 3
    coeff_bound: int = 4
    strict_prob: mpq = mpq(1, 3)

    def __post_init__(self) -> None:
        if self.dim < 1 or self.pieces < 1 or self.coeff_bound < 1:
            raise InputError("dim, pieces and coeff_bound must be positive")
        if not 0 <= self.strict_prob <= 1:
            raise InputError("strict_prob must lie in [0, 1]")

    def key(self) -> str:
        return f"{self.seed}:{self.dim}:{self.pieces}:{self.coeff_bound}:{qn.fmt(self.strict_prob)}"

    def rng(self, *salt: object) -> random.Random:
        # string seeds hash through sha512, so streams do not depend on PYTHONHASHSEED
        return random.Random(":".join([self.key(), *map(str, salt)]))


def _coin(rng: random.Random, p: mpq) -> bool:
    return rng.randrange(p.denominator) < p.numerator


def _int_vec(rng: random.Random, n: int, bound: int) -> Vec:
    return tuple(mpq(rng.randint(-bound, bound)) for _ in range(n))


def random_polytope(rng: random.Random, n: int, bound: int, *, full: bool = False,
                    rays: bool = True) -> GenPolyhedron:
    """Closed hull of a few integer points (and occasionally a ray)."""
    for _ in range(MAX_TRIES):
        k = rng.randint(n + 1, n + 3) if full else rng.randint(1, n + 2)
        pts = tuple(_int_vec(rng, n, bound) for _ in range(k))
        rs: tuple[Vec, ...] = ()
        if rays and rng.random() < 0.15:
            r = _int_vec(rng, n, 1)
            if not qn.is_zero(r):
                rs = (r,)
        P = convex_hull(GeneratorSet(n, pts, rs))
        if full and affine_hull(P).flat_dim != n:
            continue
        return P
    raise ResourceError("rejection budget exceeded")


def strictify(rng: random.Random, P: GenPolyhedron, p: mpq, skip: int | None = None) -> GenPolyhedron:
    """Make each inequality strict with probability ``p``."""
    rows = []
    for i, c in enumerate(P.constraints):
        if c.rel == LE and i != skip and _coin(rng, p):
            c = Constraint(c.a, LT, c.b)
        rows.append(c)
    return GenPolyhedron(P.dim, tuple(rows))


def _piece(rng: random.Random, spec: InstanceSpec, n: int, **kw) -> GenPolyhedron:
    for _ in range(MAX_TRIES):
        P = strictify(rng, random_polytope(rng, n, spec.coeff_bound, **kw), spec.strict_prob)
        if nonempty(P):
            return P
    raise ResourceError("rejection budget exceeded")


def gen_polyhedron(spec: InstanceSpec, *, full: bool = False, rays: bool = True) -> GenPolyhedron:
    return _piece(spec.rng("polyhedron", full, rays), spec, spec.dim, full=full, rays=rays)


def gen_union(spec: InstanceSpec, *, rays: bool = True, n: int | None = None) -> UnionSet:
    n = spec.dim if n is None else n
    rng = spec.rng("union", rays, n)
    m = rng.randint(1, spec.pieces)
    return UnionSet(n, tuple(_piece(rng, spec, n, rays=rays) for _ in range(m)))


def _face_pieces(rng: random.Random, Q: GenPolyhedron, p: mpq) -> list[GenPolyhedron]:
    """Random partially open subsets of facets and vertices of ``Q``."""
    out = []
    for i, c in enumerate(Q.constraints):
        if c.rel != LE or not rng.random() < 0.5:
            continue
        face = list(Q.constraints)
        face[i] = Constraint(c.a, EQ, c.b)
        out.append(strictify(rng, GenPolyhedron(Q.dim, tuple(face)), p, skip=i))
    G = to_generators(Q)
    for v in G.points:
        if rng.random() < 0.25:
            out.append(GenPolyhedron.of(Q.dim, [(qn.unit(Q.dim, j), "=", v[j]) for j in range(Q.dim)]))
    return out


def gen_nearly_convex(spec: InstanceSpec, *, full: bool = False, n: int | None = None,
                      salt: object = "") -> UnionSet:
    """``ri(Q)`` plus random pieces of faces of ``Q``: nearly convex by
    construction."""
    n = spec.dim if n is None else n
    rng = spec.rng("nearly_convex", full, n, salt)
    Q = random_polytope(rng, n, spec.coeff_bound, full=full)
    pieces = [ri_representation(Q)] + _face_pieces(rng, Q, spec.strict_prob)
    return UnionSet(n, tuple(pieces[: max(spec.pieces, 1) + 2]))


def _split_dims(rng: random.Random, total: int) -> tuple[int, int]:
    total = max(total, 2)
    dx = rng.randint(1, total - 1)
    return dx, total - dx


def _sheared(rng: random.Random, spec: InstanceSpec, dx: int, dy: int):
    D = random_polytope(rng, dx, spec.coeff_bound, full=True, rays=False)
    B = random_polytope(rng, dy, spec.coeff_bound, full=True, rays=False)
    M = [[mpq(rng.randint(-1, 1)) for _ in range(dx)] for _ in range(dy)]
    return D, B, M


def _graph_rows(D: GenPolyhedron, B: GenPolyhedron, M, dx: int, dy: int) -> list[Constraint]:
    """Rows of ``{(x, y): x in D, y - Mx in B}`` in order D rows, B rows."""
    rows = list(embed(D, dx + dy, 0).constraints)
    for c in B.constraints:
        ax = tuple(-sum((c.a[i] * M[i][j] for i in range(dy)), ZERO) for j in range(dx))
        rows.append(Constraint(ax + tuple(c.a), c.rel, c.b))
    return rows


def gen_convex_map(spec: InstanceSpec, *, full_slices: bool = False) -> SetMap:
    """A single generalized polyhedron as graph; ``full_slices`` uses a
    sheared product so that every slice over the domain is full-dimensional."""
    rng = spec.rng("convex_map", full_slices)
    dx, dy = _split_dims(rng, spec.dim)
    if full_slices or rng.random() < 0.5:
        D, B, M = _sheared(rng, spec, dx, dy)
        G = GenPolyhedron(dx + dy, tuple(_graph_rows(D, B, M, dx, dy)))
        G = strictify(rng, G, spec.strict_prob)
    else:
        G = _piece(rng, spec, dx + dy, rays=False)
    return SetMap(dx, dy, UnionSet.single(G))


def gen_nonconvex_map(spec: InstanceSpec) -> SetMap:
    rng = spec.rng("nonconvex_map")
    dx, dy = _split_dims(rng, spec.dim)
    return SetMap(dx, dy, gen_union(spec, n=dx + dy))


def gen_nc_map(spec: InstanceSpec) -> SetMap:
    """A nearly convex graph between ``ri G`` and ``G`` for a sheared product
    ``G``; every slice over the domain is nearly convex and full-dimensional."""
    rng = spec.rng("nc_map")
    dx, dy = _split_dims(rng, spec.dim)
    D, B, M = _sheared(rng, spec, dx, dy)
    nD = len(D.constraints)
    base = _graph_rows(D, B, M, dx, dy)
    n = dx + dy
    open_rows = tuple(Constraint(c.a, LT if c.rel == LE else c.rel, c.b) for c in base)
    pieces = [GenPolyhedron(n, open_rows)]
    for i, c in enumerate(base):
        if c.rel != LE or not rng.random() < 0.5:
            continue
        rows = list(base)
        rows[i] = Constraint(c.a, EQ, c.b)
        if i < nD:
            # x on a closed facet of D, the whole (partly open) slice above it
            for j in range(nD, len(rows)):
                if rows[j].rel == LE and _coin(rng, spec.strict_prob):
                    rows[j] = Constraint(rows[j].a, LT, rows[j].b)
        else:
            # x in ri D, y on a face of the slice
            for j in range(nD):
                if rows[j].rel == LE:
                    rows[j] = Constraint(rows[j].a, LT, rows[j].b)
            for j in range(nD, len(rows)):
                if j != i and rows[j].rel == LE and _coin(rng, spec.strict_prob):
                    rows[j] = Constraint(rows[j].a, LT, rows[j].b)
        pieces.append(GenPolyhedron(n, tuple(rows)))
    return SetMap(dx, dy, UnionSet(n, tuple(pieces)))


def gen_pl_function(spec: InstanceSpec) -> PLConvexFunction:
    rng = spec.rng("pl_function")
    n = max(1, min(spec.dim - 1, 3)) if spec.dim > 1 else 1
    k = rng.randint(1, max(spec.pieces, 1))
    pieces = [(_int_vec(rng, n, spec.coeff_bound), mpq(rng.randint(-spec.coeff_bound, spec.coeff_bound)))
              for _ in range(k)]
    if rng.random() < 0.3:
        dom = universe(n)
    else:
        dom = _piece(rng, spec, n)
    return epi_of(pieces, dom)


def generate(spec: InstanceSpec, kind: str, **options):
    if kind == "polyhedron":
        return gen_polyhedron(spec, **options)
    if kind == "union":
        return gen_union(spec, **options)
    if kind == "nearly_convex":
        return gen_nearly_convex(spec, **options)
    if kind == "convex_map":
        return gen_convex_map(spec, **options)
    if kind == "nc_map":
        return gen_nc_map(spec, **options)
    if kind == "pl_function":
        return gen_pl_function(spec, **options)
    raise InputError(f"unknown instance kind {kind!r}")


# ---------------------------------------------------------------- witness points

def _centroid(vs: Sequence[Vec]) -> Vec:
    k = len(vs)
    return tuple(sum(c, ZERO) / k for c in zip(*vs))


def _ri_sample(rng: random.Random, G: GeneratorSet) -> Vec:
    """Positive weights on every point and ray land in the relative interior."""
    ws = [rng.randint(1, 5) for _ in G.points]
    tot = sum(ws)
    x = [ZERO] * G.dim
    for w, p in zip(ws, G.points):
        x = [a + mpq(w, tot) * b for a, b in zip(x, p)]
    for r in G.rays:
        t = mpq(rng.randint(1, 3), 2)
        x = [a + t * b for a, b in zip(x, r)]
    return tuple(x)


def witness_points(S: UnionSet, spec: InstanceSpec | None = None, samples: int = 2,
                   cap: int = 24) -> list[Vec]:
    """Structured points for pointwise checks: centroids and relative-interior
    samples of each piece closure, vertices, facet centroids, then pairwise
    midpoints; deduplicated, truncated to ``cap`` in that priority order and
    returned sorted."""
    S.require_nonempty()
    rng = (spec or InstanceSpec(0)).rng("witness", S.dim, len(S.pieces))
    cents, samp, verts, fcents = [], [], [], []
    for P in S.pieces:
        C = closure(P)
        G = to_generators(C)
        vs = list(G.points)
        verts += vs
        cents.append(_centroid(vs))
        samp += [_ri_sample(rng, G) for _ in range(samples)]
        for c in C.constraints:
            if c.rel == LE:
                on = [v for v in vs if qn.dot(c.a, v) == c.b]
                if len(on) > 1:
                    fcents.append(_centroid(on))
    base = cents + verts + fcents
    mids = [_centroid([p, q]) for p, q in itertools.combinations(dict.fromkeys(base), 2)]
    ordered = list(dict.fromkeys(cents + samp + verts + fcents + mids))
    return sorted(ordered[:cap])


def member_points(S: UnionSet, pts: Sequence[Vec]) -> list[Vec]:
    return [p for p in pts if S.contains(p)]
