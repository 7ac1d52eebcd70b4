from __future__ import annotations


class GenriError(Exception):
    """Base class for all kernel errors."""


class InputError(GenriError, ValueError):
    """Malformed input: bad dimensions, unparsable rationals, unknown tags."""


class DimensionError(InputError):
    pass


class ResourceError(GenriError):
    """A configured budget (covering cells, generators, dimension) was exceeded."""


class EmptySetError(InputError):
    """An operation that needs a nonempty set received an empty one."""
