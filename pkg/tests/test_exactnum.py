from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genri import exactnum as qn
from genri.errors import DimensionError, InputError
from genri.exactnum import LPProblem, lp_solve, mpq, solve_linear, strict_feasibility, verify_outcome

V = qn.vec


def test_rat_parsing_and_format():
    assert qn.rat("3/6") == mpq(1, 2)
    assert qn.rat(" -4 ") == mpq(-4)
    assert qn.fmt(mpq(2, 4)) == "1/2"
    assert qn.fmt(mpq(3)) == "3"
    assert qn.parse_point("1/2,0") == (mpq(1, 2), mpq(0))
    for bad in ("0.5", "1/0", "x", True):
        with pytest.raises(InputError):
            qn.rat(bad)
    with pytest.raises(InputError):
        qn.parse_point("1,,2")


@given(st.fractions(max_denominator=50))
def test_rat_format_round_trip(f):
    assert qn.rat(qn.fmt(qn.rat(f))) == qn.rat(f)


def test_solve_identity():
    s = solve_linear([[1, 0], [0, 1]], [1, 2])
    assert s.solution == V([1, 2]) and s.nullspace == () and s.rank == 2


def test_solve_one_equation_kernel():
    s = solve_linear([[1, 1]], [0])
    assert s.solution == V([0, 0]) and s.rank == 1
    assert len(s.nullspace) == 1
    k = s.nullspace[0]
    assert k[0] == -k[1] != 0


def test_solve_inconsistent():
    s = solve_linear([[1, 0], [1, 0]], [1, 2])
    assert s.solution is None and s.rank == 1


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve_linear([[1, 0]], [1, 2])


def _box_rows():
    return ((V([1, 0]), "<=", mpq(1)), (V([-1, 0]), "<=", mpq(0)),
            (V([0, 1]), "<=", mpq(1)), (V([0, -1]), "<=", mpq(0)))


def test_lp_box_corner():
    p = LPProblem(V([1, 1]), _box_rows())
    out = lp_solve(p)
    assert out.status == "optimal" and out.value == 2 and out.point == V([1, 1])
    assert verify_outcome(p, out)


def test_lp_unbounded_with_ray():
    p = LPProblem(V([1]), ((V([-1]), "<=", mpq(0)),))
    out = lp_solve(p)
    assert out.status == "unbounded" and verify_outcome(p, out)


def test_lp_infeasible_farkas():
    p = LPProblem(V([0]), ((V([1]), "<=", mpq(0)), (V([-1]), "<=", mpq(-1))))
    out = lp_solve(p)
    assert out.status == "infeasible" and verify_outcome(p, out)


def test_lp_minimize_and_equalities():
    rows = _box_rows() + ((V([1, -1]), "=", mpq(0)),)
    p = LPProblem(V([1, 2]), rows, "min")
    out = lp_solve(p)
    assert out.status == "optimal" and out.value == 0 and verify_outcome(p, out)


def test_strict_examples():
    r = strict_feasibility([(V([1]), "<=", mpq(1)), (V([1]), "<", mpq(1))])
    assert r.feasible and r.witness[0] < 1
    assert not strict_feasibility([(V([1]), "<=", mpq(0)), (V([-1]), "<", mpq(0))]).feasible
    rows = [(V([-1, 0]), "<=", mpq(0)), (V([1, 0]), "<=", mpq(1)),
            (V([0, -1]), "<", mpq(0)), (V([0, 1]), "<", mpq(1))]
    r = strict_feasibility(rows)
    assert r.feasible and 0 < r.witness[1] < 1 and 0 <= r.witness[0] <= 1


def _brute_max(c, rows):
    """Optimum over a bounded 2-D system by enumerating constraint pairs."""
    best = None
    for (a1, _, b1), (a2, _, b2) in combinations(rows, 2):
        det = a1[0] * a2[1] - a1[1] * a2[0]
        if det == 0:
            continue
        x = ((b1 * a2[1] - b2 * a1[1]) / det, (a1[0] * b2 - a2[0] * b1) / det)
        if all(a[0] * x[0] + a[1] * x[1] <= b for a, _, b in rows):
            v = c[0] * x[0] + c[1] * x[1]
            best = v if best is None or v > best else best
    return best


coef = st.integers(-3, 3)
row = st.tuples(st.tuples(coef, coef), st.integers(-4, 4))


@settings(max_examples=150, deadline=None)
@given(st.tuples(coef, coef), st.lists(row, max_size=5))
def test_lp_matches_vertex_enumeration(c, extra):
    bounds = [((1, 0), 5), ((-1, 0), 5), ((0, 1), 5), ((0, -1), 5)]
    frows = [((Fraction(a[0]), Fraction(a[1])), "<=", Fraction(b)) for a, b in bounds + extra]
    p = LPProblem(V(c), tuple((V(a), rel, qn.rat(b)) for a, rel, b in frows))
    out = lp_solve(p)
    assert verify_outcome(p, out)
    expected = _brute_max(c, frows)
    if expected is None:
        assert out.status == "infeasible"
    else:
        assert out.status == "optimal" and out.value == qn.rat(expected)
