"""Exception types shared across the package."""

from __future__ import annotations


class RatctError(Exception):
    """Base class for all package errors."""


class DivisorZero(RatctError):
    """Division by the zero polynomial or zero operator."""


class DivisionByZero(RatctError):
    """An expression denominator is identically zero."""


class NotCoprime(RatctError):
    """Inputs required to be coprime are not."""


class NotShiftFree(RatctError):
    """A polynomial required to be shift-free in y is not."""


class NotIntegerLinear(RatctError):
    """A polynomial required to be integer-linear is not."""


class EmptyTermList(RatctError):
    """An operation needs at least one integer-linear term."""


class OrderCapExceeded(RatctError):
    """The requested order cap is below the minimal telescoper order."""

    def __init__(self, max_order: int):
        super().__init__(f"no telescoper of order <= {max_order} exists")
        self.max_order = max_order


class ParseError(RatctError):
    """Syntax error with position and the set of expected tokens."""

    def __init__(self, position: int, expected: set[str], found: str):
        self.position = position
        self.expected = set(expected)
        self.found = found
        exp = ", ".join(sorted(self.expected))
        super().__init__(f"at position {position}: expected one of {{{exp}}}, found {found!r}")
