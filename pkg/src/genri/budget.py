"""Resource caps shared by the covering and double-description routines.

Caps are held in a context variable so that a CLI invocation (or a test) can
tighten them locally without threading a parameter through every call.
"""
from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, replace
from typing import Iterator

from .errors import InputError


@dataclass(frozen=True)
class Budget:
    cells: int = 20000
    gens: int = 4096
    max_dim: int = 8


_current: contextvars.ContextVar[Budget] = contextvars.ContextVar("genri_budget", default=Budget())


def current() -> Budget:
    return _current.get()


@contextlib.contextmanager
def limits(**overrides: int) -> Iterator[Budget]:
    b = replace(_current.get(), **overrides)
    token = _current.set(b)
    try:
        yield b
    finally:
        _current.reset(token)


def parse_budget(text: str) -> dict[str, int]:
    """Parse ``cells=<n>,gens=<n>`` (either key optional)."""
    out: dict[str, int] = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, sep, val = item.partition("=")
        if not sep or key not in ("cells", "gens", "max_dim"):
            raise InputError(f"bad budget item {item!r}")
        try:
            n = int(val)
        except ValueError:
            raise InputError(f"bad budget value {val!r}") from None
        if n <= 0:
            raise InputError(f"budget {key} must be positive")
        out[key] = n
    return out
