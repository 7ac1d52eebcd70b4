"""Hand-picked instances that random seeds rarely produce."""
from __future__ import annotations

from ..errors import InputError
from ..genpoly import GenPolyhedron, UnionSet, box, singleton


def _plus_sign() -> UnionSet:
    return UnionSet(2, (box([-1, 0], [1, 0]), box([0, -1], [0, 1])))


def _l_shape() -> UnionSet:
    return UnionSet(2, (box([0, 0], [2, 1]), box([0, 0], [1, 2])))


def _open_square_with_corner() -> UnionSet:
    return UnionSet(2, (box([0, 0], [1, 1], strict=True), singleton([0, 0])))


def _half_open_pair() -> UnionSet:
    left = box([-1], [0])
    right = GenPolyhedron.of(1, [([-1], "<", 0), ([1], "<=", 1)])
    return UnionSet(1, (left, right))


CORPUS = {
    "plus_sign": _plus_sign,
    "l_shape": _l_shape,
    "open_square_with_corner": _open_square_with_corner,
    "half_open_pair": _half_open_pair,
}


def corpus_instance(name: str) -> UnionSet:
    if name not in CORPUS:
        raise InputError(f"unknown corpus instance {name!r}")
    return CORPUS[name]()
