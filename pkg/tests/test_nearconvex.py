from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genri import exactnum as qn
from genri.errors import InputError
from genri.genpoly import UnionSet, box, membership, same_set, singleton
from genri.harness.generate import InstanceSpec, generate
from genri.nearconvex import (
    CONVEX, NEARLY_CONVEX, NEITHER, NearlyConvexSet, characterizations, classify, is_convex, nc_linear_image,
    nc_translate, nearly_convex_from_json, qri_of_nearly_convex,
)

from shapes import P, U, l_shape, open_square_with_corner, plus_sign, unit_square

V = qn.vec


def test_classify_examples():
    c = classify(open_square_with_corner())
    assert c.cls == NEARLY_CONVEX and same_set(c.hull, unit_square())
    c = classify(l_shape())
    assert c.cls == NEITHER and c.witness == V(["1/2", "1/2"])
    assert classify(UnionSet.single(unit_square())).cls == CONVEX


def test_classify_witness_explains_failure():
    c = classify(plus_sign())
    assert c.cls == NEITHER
    assert membership(c.hull, c.witness) and not plus_sign().contains(c.witness)
    c = classify(open_square_with_corner())
    assert membership(c.hull, c.witness) and not open_square_with_corner().contains(c.witness)


def test_empty_union_rejected():
    with pytest.raises(InputError):
        classify(UnionSet(2, ()))


def test_is_convex_on_non_closed_sets():
    # one corner keeps every open segment inside; two corners lose their edge
    assert is_convex(open_square_with_corner())[0]
    ok, w = is_convex(U(unit_square(strict=True), singleton((0, 0)), singleton((1, 0))))
    assert not ok and w[1] == 0 and 0 < w[0] < 1
    half_open = U(P(1, ((1,), ">=", 0), ((1,), "<", 1)), P(1, ((1,), ">=", 1), ((1,), "<", 2)))
    assert is_convex(half_open)[0]
    ok, w = is_convex(U(P(1, ((1,), ">=", 0), ((1,), "<", 1)), P(1, ((1,), ">", 1), ((1,), "<", 2))))
    assert not ok and w == V([1])


def test_qri_of_nearly_convex_examples():
    N = NearlyConvexSet.build(open_square_with_corner())
    assert same_set(qri_of_nearly_convex(N), unit_square(strict=True))
    N = NearlyConvexSet.build(UnionSet.single(unit_square()))
    assert same_set(qri_of_nearly_convex(N), unit_square(strict=True))
    N = NearlyConvexSet.build(UnionSet.single(P(2, ((0, 1), "=", 0), ((1, 0), ">=", 0), ((1, 0), "<", 1))))
    assert same_set(qri_of_nearly_convex(N), P(2, ((0, 1), "=", 0), ((1, 0), ">", 0), ((1, 0), "<", 1)))
    with pytest.raises(InputError):
        NearlyConvexSet.build(l_shape())


def test_translate_and_image():
    N = NearlyConvexSet.build(open_square_with_corner())
    M = nc_translate(N, [2, 0])
    assert same_set(M.hull, box((2, 0), (3, 1)))
    assert M.body.contains(V([2, 0])) and not M.body.contains(V([3, 0]))
    img = nc_linear_image(N, [[1, 0]])
    c = classify(img.body)
    assert c.cls == NEARLY_CONVEX and is_convex(img.body)[0]  # [0,1) is convex but not closed
    assert same_set(img.hull, P(1, ((1,), ">=", 0), ((1,), "<=", 1)))
    assert classify(nc_linear_image(N, [[0, 0]]).body).cls == CONVEX


def test_json_forms():
    N = nearly_convex_from_json({"body": {"dim": 1, "pieces": [
        {"dim": 1, "constraints": [{"a": ["1"], "rel": "<", "b": "1"}, {"a": ["-1"], "rel": "<", "b": "0"}]}]}})
    assert same_set(N.hull, P(1, ((1,), ">=", 0), ((1,), "<=", 1)))


def test_characterizations_on_fixed_shapes():
    assert all(characterizations(open_square_with_corner()).values())
    assert not any(characterizations(l_shape()).values())
    assert all(characterizations(UnionSet.single(singleton([1, 1]))).values())


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from(["union", "nearly_convex"]), st.sampled_from([1, 2]))
def test_characterizations_agree(seed, kind, dim):
    S = generate(InstanceSpec(seed=seed, dim=dim), kind)
    ch = characterizations(S)
    assert len(set(ch.values())) == 1, ch
    if kind == "nearly_convex":
        assert classify(S).cls != NEITHER
