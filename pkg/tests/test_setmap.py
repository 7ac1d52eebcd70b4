from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genri import exactnum as qn
from genri.errors import InputError
from genri.genpoly import UnionSet, same_set, singleton
from genri.harness.generate import InstanceSpec, generate, member_points, witness_points
from genri.nearconvex import NEARLY_CONVEX, classify
from genri.setmap import (
    SetMap, aff_graph_check, domain_of, epi_formula_check, epi_of, graph_theorem_check, pl_from_json, range_of,
    setmap_from_json, slice_at,
)

from shapes import P, U, unit_square

V = qn.vec
TRIANGLE = SetMap(1, 1, UnionSet.single(P(2, ((0, 1), ">=", 0), ((1, -1), ">=", 0), ((1, 0), "<=", 1))))
UNIT = P(1, ((1,), ">=", 0), ((1,), "<=", 1))


def _union_equals(S: UnionSet, T) -> bool:
    from genri.cover import covers
    return all(covers(p, list(S.pieces)).covered for p in T) and all(covers(p, list(T)).covered for p in S.pieces)


def test_domain_and_range():
    assert _union_equals(domain_of(TRIANGLE), [UNIT])
    assert _union_equals(range_of(TRIANGLE), [UNIT])
    F = SetMap(1, 1, U(unit_square(strict=True), singleton((0, 0))))
    D = domain_of(F)
    assert classify(D).cls == NEARLY_CONVEX and D.contains(V([0])) and not D.contains(V([1]))
    F = SetMap(1, 1, UnionSet.single(P(2, ((1, 0), "=", 0))))
    assert _union_equals(domain_of(F), [singleton([0])])
    assert range_of(F).contains(V([-100])) and range_of(F).contains(V([100]))


def test_slices():
    assert _union_equals(slice_at(TRIANGLE, ["1/2"]), [P(1, ((1,), ">=", 0), ((1,), "<=", "1/2"))])
    assert slice_at(TRIANGLE, [2]).is_empty
    f = epi_of([([1], 0), ([-1], 0)], P(1))
    sl = slice_at(f.epigraph, [-1])
    assert sl.contains(V([1])) and sl.contains(V([50])) and not sl.contains(V(["1/2"]))


def test_epigraph_construction():
    f = epi_of([([1], 0), ([-1], 0)], P(1))
    assert same_set(f.epigraph.graph.pieces[0], P(2, ((1, -1), "<=", 0), ((-1, -1), "<=", 0)))
    g = epi_of([([0], 0)], UNIT)
    assert same_set(g.epigraph.graph.pieces[0], P(2, ((1, 0), ">=", 0), ((1, 0), "<=", 1), ((0, 1), ">=", 0)))
    h = epi_of([([1], 0), ([2], -1)], P(1))
    assert h.value(V([2])) == 3 and h.value(V([0])) == 0


def test_iri_graph_on_triangle():
    rep = graph_theorem_check("iri_graph", TRIANGLE, [["1/2", "1/4"], ["1/2", "1/2"]])
    assert rep.applicable and rep.points_checked == 2 and not rep.violations
    assert rep.directions == ("forward", "backward")


def test_qri_graph_on_convex_graph_vertices_and_midpoints():
    pts = [[0, 0], [1, 0], [1, 1], ["1/2", 0], [1, "1/2"], ["1/2", "1/2"], ["2/3", "1/3"]]
    for th in ("qri_graph_fwd", "qri_graph_bwd", "qri_int_graph"):
        rep = graph_theorem_check(th, TRIANGLE, pts)
        assert not rep.violations, th


def test_graph_check_rejects_outside_points():
    with pytest.raises(InputError):
        graph_theorem_check("iri_graph", TRIANGLE, [[0, 1]])
    with pytest.raises(InputError):
        graph_theorem_check("bogus", TRIANGLE, [[0, 0]])


def test_aff_graph_examples():
    F = SetMap(1, 1, UnionSet.single(P(2, ((1, 0), ">=", 0), ((1, 0), "<=", 1), ((0, 1), ">", 0), ((0, 1), "<", 1))))
    r = aff_graph_check(F)
    assert r.applicable and r.holds
    r = aff_graph_check(TRIANGLE)
    assert not r.applicable
    F = SetMap(1, 1, UnionSet.single(P(2, ((1, 0), "=", 0), ((0, 1), ">", 0), ((0, 1), "<", 1))))
    r = aff_graph_check(F)
    assert r.applicable and r.holds


def test_epi_formula_examples():
    f = epi_of([([1], 0), ([-1], 0)], P(1))
    rep = epi_formula_check(f, [[0, 1], [0, 0]])
    assert rep.points_checked == 2 and not rep.violations
    g = epi_of([([0], 0)], UNIT)
    assert not epi_formula_check(g, [[0, 1]]).violations


def test_json_round_trips():
    assert setmap_from_json(TRIANGLE.to_json()).to_json() == TRIANGLE.to_json()
    f = epi_of([([1], 0), ([-1], 0)], UNIT)
    assert pl_from_json(f.to_json()).to_json() == f.to_json()
    with pytest.raises(InputError):
        setmap_from_json({"dim_x": 1, "dim_y": 2, "graph": {"dim": 2, "pieces": []}})


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**32))
def test_iri_graph_on_random_convex_maps(seed):
    F = generate(InstanceSpec(seed=seed, dim=2), "convex_map")
    pts = member_points(F.graph, witness_points(F.graph))
    rep = graph_theorem_check("iri_graph", F, pts)
    assert rep.applicable and not rep.violations


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**32))
def test_epi_formula_on_random_functions(seed):
    f = generate(InstanceSpec(seed=seed, dim=2), "pl_function")
    E = f.epigraph.graph
    assert not epi_formula_check(f, member_points(E, witness_points(E))).violations
