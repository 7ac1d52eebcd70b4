"""Small exact shapes shared by the tests."""
from __future__ import annotations

from genri.exactnum import mpq
from genri.genpoly import GenPolyhedron, UnionSet, box, singleton


def Q(x) -> mpq:
    return mpq(x)


def P(dim: int, *rows) -> GenPolyhedron:
    """Rows as ``(a, rel, b)``; ``>=`` and ``>`` are accepted."""
    return GenPolyhedron.of(dim, rows)


def U(*pieces: GenPolyhedron) -> UnionSet:
    return UnionSet(pieces[0].dim, tuple(pieces))


def segment_x(lo=0, hi=1) -> GenPolyhedron:
    """``[lo, hi] x {0}`` in the plane."""
    return P(2, ((0, 1), "=", 0), ((1, 0), ">=", lo), ((1, 0), "<=", hi))


def plus_sign() -> UnionSet:
    return U(P(2, ((0, 1), "=", 0), ((1, 0), ">=", -1), ((1, 0), "<=", 1)),
             P(2, ((1, 0), "=", 0), ((0, 1), ">=", -1), ((0, 1), "<=", 1)))


def l_shape() -> UnionSet:
    return U(segment_x(), P(2, ((1, 0), "=", 0), ((0, 1), ">=", 0), ((0, 1), "<=", 1)))


def unit_square(strict: bool = False) -> GenPolyhedron:
    return box((0, 0), (1, 1), strict=strict)


def open_square_with_corner() -> UnionSet:
    return U(unit_square(strict=True), singleton((0, 0)))
