"""Exact covering test: is a generalized polyhedron contained in a finite
union of generalized polyhedra?"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import budget
from . import exactnum as qn
from .errors import DimensionError, ResourceError
from .exactnum import Vec
from .genpoly import Constraint, GenPolyhedron


@dataclass(frozen=True)
class CoverResult:
    covered: bool
    witness: Vec | None
    cells: int


class _Counter:
    def __init__(self, cap: int) -> None:
        self.cap = cap
        self.n = 0

    def tick(self) -> None:
        self.n += 1
        if self.n > self.cap:
            raise ResourceError(f"covering exceeded {self.cap} cells")


def covers(target: GenPolyhedron, pieces: Sequence[GenPolyhedron]) -> CoverResult:
    """Decide ``target`` is a subset of the union of ``pieces``.

    Each cell is tested for emptiness; a nonempty cell yields a point ``w``.
    If ``w`` lies in no remaining piece it is a gap witness.  Otherwise the
    first piece containing ``w`` is subtracted: the cell splits into the parts
    violating that piece's rows one at a time, and those parts recurse without
    that piece.
    """
    n = target.dim
    for p in pieces:
        if p.dim != n:
            raise DimensionError("dimension mismatch in covering")
    counter = _Counter(budget.current().cells)
    gap = _cover(list(target.constraints), tuple(range(len(pieces))), pieces, n, counter)
    return CoverResult(gap is None, gap, counter.n)


def _cover(cell: list[Constraint], remaining: tuple[int, ...], pieces: Sequence[GenPolyhedron],
           n: int, counter: _Counter) -> Vec | None:
    counter.tick()
    res = qn.strict_feasibility([c.as_row() for c in cell], n)
    if not res.feasible:
        return None
    w = res.witness
    j = next((i for i in remaining if pieces[i].contains(w)), None)
    if j is None:
        return w
    rest = tuple(i for i in remaining if i != j)
    prefix: list[Constraint] = []
    for c in pieces[j].constraints:
        for neg in c.negations():
            gap = _cover(cell + prefix + [neg], rest, pieces, n, counter)
            if gap is not None:
                return gap
        prefix.append(c)
    return None
