"""Exception types shared by the algebra package, the CLI and the HTTP layer.

Everything derives from CharLabError, itself a ValueError, so callers that only
care about "bad input or failed computation" can catch one type.
"""
from typing import Optional


class CharLabError(ValueError):
    """Base class for every domain error raised by charlab."""


class ConfigError(CharLabError):
    pass


class InvalidOrderError(CharLabError):
    pass


class OrderMismatchError(CharLabError):
    pass


class InvalidPermutationError(CharLabError):
    pass


class GroupTooLargeError(CharLabError):
    pass


class ElementNotInGroupError(CharLabError):
    pass


class UnknownGroupError(CharLabError):
    pass


class PrimeSearchError(CharLabError):
    pass


class DixonError(CharLabError):
    """The modular eigenvector computation or the lift to Q[xi_n] failed."""


class CorruptTableError(CharLabError):
    pass


class NotCoprimeError(CharLabError):
    pass


class ModulusMismatchError(CharLabError):
    pass


class NotCyclicError(CharLabError):
    pass


class InvariantViolation(CharLabError):
    """A verified-not-assumed identity did not hold."""


class SpecParseError(CharLabError):
    """Malformed textual input; carries the offending offset and what was expected."""

    def __init__(self, message: str, offset: int, expected: Optional[str] = None):
        self.offset = offset
        self.expected = expected
        detail = f"parse error at offset {offset}: {message}"
        if expected:
            detail += f", expected {expected}"
        super().__init__(detail)


class InvalidParameterError(CharLabError):
    """A numeric argument outside its domain, e.g. a matrix of determinant != 1."""
