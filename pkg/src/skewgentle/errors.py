"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SkewGentleError(Exception):
    """Base class for all errors raised by :mod:`skewgentle`."""


class PresentationError(SkewGentleError, ValueError):
    """Malformed or inconsistent presentation data.

    ``line`` and ``column`` are 1-based and only set for text-parsing errors.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class PreconditionError(SkewGentleError, ValueError):
    """An operation was called on input outside its documented domain."""


class CharacteristicError(SkewGentleError, ValueError):
    """Raised whenever a field of characteristic 2 is requested."""

    def __init__(self, message: str | None = None):
        super().__init__(
            message
            or "characteristic 2 is not supported: skew-gentle algebras are only "
            "handled over fields with char(k) != 2"
        )


class ReflectionError(SkewGentleError):
    """A reflection functor cannot be applied at the requested vertex."""


class BudgetExceeded(SkewGentleError):
    """A brute-force enumeration would exceed its configured budget."""


class RepresentationFiniteError(SkewGentleError):
    """No infinite brick family exists because the algebra is representation-finite."""

    def __init__(self, message: str | None = None):
        super().__init__(
            message
            or "no infinite family exists: the algebra is representation-finite, "
            "and a skew-gentle algebra is brick-finite iff it is representation-finite"
        )
