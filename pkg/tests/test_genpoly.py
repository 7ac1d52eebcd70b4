from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genri import exactnum as qn
from genri.cover import covers
from genri.dd import (
    GeneratorSet, convex_hull, generators_from_json, generators_to_json, linear_image, minkowski_sum, negate,
    to_generators,
)
from genri.budget import limits
from genri.errors import InputError, ResourceError
from genri.genpoly import (
    UnionSet, affine_hull, canonical, closure, homogenize_cone, is_empty, membership, poly_from_json,
    poly_to_json, pointwise_cone_membership, project, ri_representation, same_set, singleton, union_from_json,
    union_to_json, universe,
)

from shapes import P, segment_x, unit_square

V = qn.vec


def test_membership_examples():
    assert membership(P(1, ((1,), ">=", 0), ((1,), "<=", 1)), [1])
    assert not membership(P(1, ((1,), ">=", 0), ((1,), "<", 1)), [1])
    assert membership(P(2, ((1, 1), "=", 1), ((1, 0), ">=", 0), ((0, 1), ">=", 0)), ["1/2", "1/2"])


def test_emptiness_examples():
    assert is_empty(P(1, ((1,), "<", 0), ((1,), ">", 0))).empty
    e = is_empty(P(1, ((1,), "<", 1)))
    assert not e.empty and e.witness[0] < 1
    assert is_empty(P(1, ((1,), "<=", 0), ((1,), ">=", 0), ((1,), "<", 0))).empty


def test_affine_hull_examples():
    h = affine_hull(segment_x())
    assert h.basepoint == V([0, 0]) and h.basis == (V([1, 0]),)
    assert affine_hull(unit_square()).flat_dim == 2
    h = affine_hull(P(2, ((1, 1), "<=", 1), ((1, 1), ">=", 1)))
    assert h.flat_dim == 1 and h.contains(V([1, 0])) and h.contains(V([3, -2])) and not h.contains(V([0, 0]))


def test_closure_examples():
    assert same_set(closure(P(1, ((1,), ">", 0), ((1,), "<", 1))), P(1, ((1,), ">=", 0), ((1,), "<=", 1)))
    half = P(1, ((1,), "<=", 1))
    assert same_set(closure(half), half)
    open_seg = P(2, ((0, 1), "=", 0), ((1, 0), ">", 0), ((1, 0), "<", 1))
    assert same_set(closure(open_seg), segment_x())


def test_closure_of_degenerate_strict_system():
    # the relaxation's relative interior misses the set: x <= 0 together with x < 0 and y = x
    Pst = P(2, ((1, 0), "<", 0), ((1, 0), ">=", -1), ((1, -1), "=", 0))
    cl = closure(Pst)
    assert membership(cl, [0, 0]) and membership(cl, [-1, -1]) and not membership(cl, [0, 1])


def test_projection_examples():
    tri = P(2, ((0, 1), ">=", 0), ((1, -1), ">=", 0), ((1, 0), "<=", 1))
    assert same_set(project(tri, [0]), P(1, ((1,), ">=", 0), ((1,), "<=", 1)))
    diag = P(2, ((0, 1), ">", 0), ((0, 1), "<", 1), ((1, -1), "=", 0))
    assert same_set(project(diag, [0]), P(1, ((1,), ">", 0), ((1,), "<", 1)))
    assert same_set(project(unit_square(strict=True), [0]), P(1, ((1,), ">", 0), ((1,), "<", 1)))


def test_hull_and_generators():
    tri = convex_hull(GeneratorSet(2, (V([0, 0]), V([1, 0]), V([0, 1]))))
    assert same_set(tri, P(2, ((1, 0), ">=", 0), ((0, 1), ">=", 0), ((1, 1), "<=", 1)))
    g = to_generators(P(2, ((1, 0), ">=", 0), ((0, 1), ">=", 0)))
    assert g.points == (V([0, 0]),) and set(g.rays) == {V([1, 0]), V([0, 1])} and g.lines == ()
    sq = convex_hull(GeneratorSet(2, (V([0, 0]), V([1, 0]), V([0, 1]), V([1, 1]))))
    assert len(canonical(sq).constraints) == 4 and same_set(sq, unit_square())


def test_images_and_sums():
    tri = P(2, ((1, 0), ">=", 0), ((0, 1), ">=", 0), ((1, 1), "<=", 1))
    assert same_set(linear_image(tri, [[1, 0]]), P(1, ((1,), ">=", 0), ((1,), "<=", 1)))
    yseg = P(2, ((1, 0), "=", 0), ((0, 1), ">=", 0), ((0, 1), "<=", 1))
    assert same_set(minkowski_sum(segment_x(), yseg), unit_square())
    assert same_set(negate(P(1, ((1,), ">=", 0))), P(1, ((1,), "<=", 0)))


def test_homogenization_examples():
    c = homogenize_cone(unit_square(), V([0, 0]))
    assert c.exact and same_set(c.closed, P(2, ((1, 0), ">=", 0), ((0, 1), ">=", 0)))
    c = homogenize_cone(unit_square(), V(["1/2", "1/2"]))
    assert c.exact and same_set(c.closed, universe(2))
    top = P(2, ((0, 1), "=", 1), ((1, 0), ">=", 0), ((1, 0), "<=", 1))
    c = homogenize_cone(top, V([0, 0]))
    assert not c.exact
    assert same_set(c.closed, P(2, ((1, 0), ">=", 0), ((1, -1), "<=", 0)))
    assert c.contains(V([1, 1])) and not c.contains(V([1, 0]))


def test_pointwise_cone_membership():
    assert pointwise_cone_membership(unit_square(), [0, 0], [2, 3])
    top = P(2, ((0, 1), "=", 1), ((1, 0), ">=", 0), ((1, 0), "<=", 1))
    assert not pointwise_cone_membership(top, [0, 0], [1, 0])
    assert pointwise_cone_membership(top, [0, 0], [0, 0])


def _interval(lo, hi, lo_rel=">=", hi_rel="<="):
    return P(1, ((1,), lo_rel, lo), ((1,), hi_rel, hi))


def test_covers_examples():
    target = _interval(0, 2)
    assert covers(target, [_interval(0, 1), _interval(1, 2)]).covered
    r = covers(target, [_interval(0, 1, hi_rel="<"), _interval(1, 2, lo_rel=">")])
    assert not r.covered and r.witness == V([1])
    xa = P(2, ((0, 1), "=", 0))
    ya = P(2, ((1, 0), "=", 0))
    r = covers(universe(2), [xa, ya])
    assert not r.covered
    w = r.witness
    assert not membership(xa, w) and not membership(ya, w)


def test_covers_budget():
    pieces = [_interval(k, k + 1) for k in range(30)]
    assert covers(_interval(0, 30), pieces).cells > 5
    with limits(cells=5):
        with pytest.raises(ResourceError):
            covers(_interval(0, 30), pieces)


def test_ri_representation_examples():
    assert same_set(ri_representation(unit_square()), unit_square(strict=True))
    open_seg = P(2, ((0, 1), "=", 0), ((1, 0), ">", 0), ((1, 0), "<", 1))
    assert same_set(ri_representation(segment_x()), open_seg)
    pt = singleton([1, 2])
    assert same_set(ri_representation(pt), pt)


def test_json_round_trip_and_errors():
    Pj = poly_to_json(canonical(segment_x()))
    assert poly_to_json(poly_from_json(json.loads(json.dumps(Pj)))) == Pj
    S = UnionSet(2, (segment_x(), unit_square(strict=True)))
    assert union_to_json(union_from_json(union_to_json(S))) == union_to_json(S)
    G = GeneratorSet(2, (V([0, 0]),), (V([1, 0]),))
    assert generators_from_json(generators_to_json(G)) == G
    for bad in ({"dim": 1, "constraints": [{"a": ["1"], "rel": "<>", "b": "0"}]},
                {"dim": 2, "constraints": [{"a": ["1"], "rel": "<=", "b": "0"}]},
                {"dim": 1, "constraints": [{"a": ["0.5"], "rel": "<=", "b": "0"}]},
                [1, 2]):
        with pytest.raises(InputError):
            poly_from_json(bad)


# ---------------------------------------------------------------- properties

small = st.integers(-2, 2)
rels = st.sampled_from(["<=", "<", "="])
rows2 = st.lists(st.tuples(st.tuples(small, small).filter(lambda a: a != (0, 0)), rels, small), min_size=1,
                 max_size=4)
GRID = [Fraction(i, 4) for i in range(-12, 13)]


def _poly2(rows):
    return P(2, *rows, ((1, 0), "<=", 3), ((1, 0), ">=", -3), ((0, 1), "<=", 3), ((0, 1), ">=", -3))


def _grid_points():
    return [(x, y) for x in GRID for y in GRID]


@settings(max_examples=60, deadline=None)
@given(rows2)
def test_canonical_preserves_membership(rows):
    Pp = _poly2(rows)
    C = canonical(Pp)
    assert all(membership(Pp, p) == membership(C, p) for p in _grid_points()[::7])
    assert poly_to_json(canonical(C)) == poly_to_json(C)


@settings(max_examples=60, deadline=None)
@given(rows2)
def test_closure_contains_set_and_is_closed(rows):
    Pp = _poly2(rows)
    cl = closure(Pp)
    assert cl.is_closed
    pts = [p for p in _grid_points()[::5] if membership(Pp, p)]
    assert all(membership(cl, p) for p in pts)
    if is_empty(Pp).empty:
        assert is_empty(cl).empty


@settings(max_examples=60, deadline=None)
@given(rows2)
def test_projection_shadows_points(rows):
    Pp = _poly2(rows)
    pr = project(Pp, [0])
    for p in _grid_points()[::5]:
        if membership(Pp, p):
            assert membership(pr, [p[0]])
    w = is_empty(pr).witness
    if w is not None:
        fiber = Pp.with_constraints(P(2, ((1, 0), "=", w[0])).constraints)
        assert not is_empty(fiber).empty


@settings(max_examples=60, deadline=None)
@given(st.lists(rows2, min_size=1, max_size=3), rows2)
def test_cover_witness_is_a_real_gap(piece_rows, target_rows):
    T = _poly2(target_rows)
    pieces = [_poly2(r) for r in piece_rows]
    r = covers(T, pieces)
    if r.covered:
        pts = [p for p in _grid_points()[::3] if membership(T, p)]
        assert all(any(membership(Q, p) for Q in pieces) for p in pts)
    else:
        assert membership(T, r.witness) and not any(membership(Q, r.witness) for Q in pieces)
