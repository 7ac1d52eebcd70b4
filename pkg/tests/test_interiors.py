from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genri import exactnum as qn
from genri.errors import InputError
from genri.genpoly import UnionSet, membership, same_set, singleton
from genri.harness.brute import BruteOracle
from genri.harness.generate import InstanceSpec, generate, witness_points
from genri.interiors import (
    InteriorKind, cone_at, interior_membership, is_subspace_union, normal_cone,
)

from shapes import P, U, plus_sign, segment_x, unit_square

V = qn.vec
SQUARE = UnionSet.single(unit_square())
SEG = UnionSet.single(segment_x())


def member(kind, S, x):
    return interior_membership(kind, S, V(x)).verdict


def test_cone_at_examples():
    c = cone_at(plus_sign(), V([0, 0]))
    assert len(c.parts) == 2 and all(p.exact for p in c.parts)
    assert c.contains(V([-5, 0])) and c.contains(V([0, 3])) and not c.contains(V([1, 1]))
    c = cone_at(SQUARE, V([0, 0]))
    assert c.contains(V([2, 7])) and not c.contains(V([-1, 0]))
    c = cone_at(UnionSet.single(singleton([0, 0])), V([0, 0]))
    assert c.contains(V([0, 0])) and not c.contains(V([1, 0]))


def test_subspace_union_examples():
    cert = is_subspace_union(cone_at(plus_sign(), V([0, 0])), "closure")
    assert not cert.verdict
    w = cert.evidence["point"]
    assert w[0] != 0 and w[1] != 0
    cert = is_subspace_union(cone_at(SQUARE, V(["1/2", "1/2"])), "exact")
    assert cert.verdict and len(cert.evidence["basis"]) == 2
    assert is_subspace_union(cone_at(UnionSet.single(singleton([0, 0])), V([0, 0])), "exact").verdict


def test_membership_examples():
    assert member("qri", SEG, ["1/2", 0])
    assert not member("iri", plus_sign(), [0, 0])
    assert member("qi", SQUARE, ["1/2", "1/2"])
    assert not member("qi", SQUARE, [0, "1/2"])
    assert not member("rint", plus_sign(), ["1/2", 0])


def test_rint_uses_local_structure():
    # [-1,0] u (0,1] is the closed interval [-1,1]; 0 is a relative interior point
    S = U(P(1, ((1,), ">=", -1), ((1,), "<=", 0)), P(1, ((1,), ">", 0), ((1,), "<=", 1)))
    assert member("rint", S, [0]) and member("ri", S, [0])


def test_half_open_segment_endpoints():
    S = UnionSet.single(P(2, ((0, 1), "=", 0), ((1, 0), ">=", 0), ((1, 0), "<", 1)))
    for kind in InteriorKind:
        assert not member(kind.value, S, [0, 0])
    assert all(member(k, S, ["1/2", 0]) for k in ("ri", "rint", "iri", "sqri", "qri"))
    assert not member("qi", S, ["1/2", 0])


def test_plus_sign_center_is_in_no_interior():
    # the cone at the center is the union of the two axes, symmetric but not a subspace
    S = plus_sign()
    for kind in InteriorKind:
        assert not member(kind.value, S, [0, 0])
    # off center the other arm adds a sector to the cone
    assert not member("qri", S, ["1/2", 0])


def test_bad_kind_and_point():
    with pytest.raises(InputError):
        interior_membership("nope", SQUARE, V([0, 0]))
    with pytest.raises(InputError):
        interior_membership("ri", SQUARE, V([0]))


def test_normal_cone_examples():
    N = normal_cone(SEG, V([0, 0]))
    assert same_set(N.cone, P(2, ((1, 0), "<=", 0)))
    N = normal_cone(SEG, V(["1/2", 0]))
    assert same_set(N.cone, P(2, ((1, 0), "=", 0))) and N.is_subspace()
    N = normal_cone(SQUARE, V(["1/2", "1/2"]))
    assert N.is_trivial()


CHAIN = (("ri", "sqri"), ("sqri", "iri"), ("iri", "qri"), ("ri", "rint"), ("rint", "iri"), ("qi", "qri"))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([1, 2, 3]))
def test_inclusion_chain_on_random_unions(seed, dim):
    S = generate(InstanceSpec(seed=seed, dim=dim, pieces=3), "union")
    for x in witness_points(S)[:10]:
        v = {k.value: interior_membership(k, S, x).verdict for k in InteriorKind}
        for a, b in CHAIN:
            assert not v[a] or v[b], (a, b, x)
        if v["qri"] or v["iri"]:
            assert any(membership(Pc, x) for Pc in S.pieces)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([1, 2]))
def test_agrees_with_grid_oracle(seed, dim):
    S = generate(InstanceSpec(seed=seed, dim=dim, pieces=2, coeff_bound=2), "union")
    try:
        oracle = BruteOracle(S)
    except InputError:
        return  # unbounded pieces are outside the oracle's reach
    for x in witness_points(S)[:8]:
        expected = oracle.verdicts(x)
        for kind, val in expected.items():
            assert interior_membership(kind, S, x).verdict == val, (kind, x)
