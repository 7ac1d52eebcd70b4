"""Greedy shrinking of union-shaped counterexamples."""
from __future__ import annotations

from typing import Callable

from ..errors import GenriError
from ..exactnum import mpq
from ..genpoly import Constraint, GenPolyhedron, UnionSet, nonempty


def _still_bad(bad: Callable[[UnionSet], bool], S: UnionSet) -> bool:
    try:
        return not S.is_empty and bad(S)
    except (GenriError, ValueError):
        return False


def _toward_zero(v: mpq) -> mpq:
    if v == 0:
        return v
    if v.denominator != 1:
        return mpq(int(v))  # truncation moves toward zero
    return v - 1 if v > 0 else v + 1


def _candidates(S: UnionSet):
    ps = list(S.pieces)
    n = S.dim
    if len(ps) > 1:
        for i in range(len(ps)):
            yield UnionSet(n, tuple(ps[:i] + ps[i + 1:]))
    for i, P in enumerate(ps):
        cs = list(P.constraints)
        for j in range(len(cs)):
            Q = GenPolyhedron(n, tuple(cs[:j] + cs[j + 1:]))
            yield UnionSet(n, tuple(ps[:i] + [Q] + ps[i + 1:]))
    for i, P in enumerate(ps):
        cs = list(P.constraints)
        for j, c in enumerate(cs):
            for k in range(n + 1):
                a = list(c.a)
                b = c.b
                if k < n:
                    if a[k] == 0:
                        continue
                    a[k] = _toward_zero(a[k])
                else:
                    if b == 0:
                        continue
                    b = _toward_zero(b)
                if all(t == 0 for t in a):
                    continue
                Q = GenPolyhedron(n, tuple(cs[:j] + [Constraint(tuple(a), c.rel, b)] + cs[j + 1:]))
                if nonempty(Q):
                    yield UnionSet(n, tuple(ps[:i] + [Q] + ps[i + 1:]))


def shrink(S: UnionSet, bad: Callable[[UnionSet], bool], max_steps: int = 200) -> UnionSet:
    """Remove pieces, then constraints, then pull coefficients toward zero,
    keeping each change only while ``bad`` still holds."""
    steps = 0
    improved = True
    while improved and steps < max_steps:
        improved = False
        for T in _candidates(S):
            steps += 1
            if _still_bad(bad, T):
                S = T
                improved = True
                break
            if steps >= max_steps:
                break
    return S
