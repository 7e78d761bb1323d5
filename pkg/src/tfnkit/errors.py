"""Exception hierarchy for the package.

Everything raised deliberately by this library derives from :class:`TFNError`,
so callers can catch one base.  Where a builtin exception has the right
semantics the class subclasses it too (the ``decimal`` module uses the same
trick), so e.g. ``except ZeroDivisionError`` still works.
"""

_BuiltinOverflowError = OverflowError


class TFNError(Exception):
    """Base class for all errors raised by tfnkit."""


class ValidationError(TFNError, ValueError):
    """A value violates a construction invariant (ordering, finiteness, weights)."""


class DomainError(TFNError, ValueError):
    """An argument lies outside an operation's domain (alpha level, scalar sign, ...)."""


class DimensionMismatch(TFNError, ValueError):
    """Tuple lengths or aggregator arity do not agree."""


class ParseError(TFNError, ValueError):
    """Malformed input text; the message carries the offending line number."""


class DivisionByZero(TFNError, ZeroDivisionError):
    """Division by a crisp zero (zero lies in the divisor's support)."""


class OverflowError(TFNError, _BuiltinOverflowError):  # noqa: A001 - deliberate shadow
    """An arithmetic result has a non-finite component."""
