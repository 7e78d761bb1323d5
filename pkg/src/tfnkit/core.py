"""Triangular fuzzy number values and their closed-form arithmetic.

A triangular fuzzy number (TFN) is a triple ``(a, b, c)`` with
``a <= b <= c``: membership 1 at the peak ``b``, linear ramps down to 0 at
``a`` and ``c``, and 0 outside ``[a, c]``.  Crisp numbers embed as
``(r, r, r)`` and act as the scalars of the whole package.

Equality here is exact float equality, never tolerance-based: the total
order in :mod:`tfnkit.order` needs antisymmetry, and a fuzzy "almost equal"
would destroy it.  All values are immutable and every operation is a pure
function, so everything in this module is safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivisionByZero, DomainError, OverflowError, ValidationError

__all__ = [
    "TFN",
    "CrispScalar",
    "Interval",
    "ZERO",
    "make_tfn",
    "membership",
    "alpha_cut",
    "add",
    "sub",
    "neg",
    "scalar_mul",
    "crisp_mul",
    "crisp_div",
    "repeat_add",
    "is_zero_isosceles",
]


def _finite(value: float) -> bool:
    return isinstance(value, (int, float)) and math.isfinite(value)


def _canonical(value: float) -> float:
    # float() unifies int inputs; adding 0.0 turns -0.0 into +0.0 so that
    # printed output round-trips to one canonical bit pattern.
    return float(value) + 0.0


@dataclass(frozen=True, slots=True)
class TFN:
    """Triangular fuzzy number ``(a, b, c)`` with ``a <= b <= c``.

    Construction validates finiteness and ordering; arithmetic helpers live
    as module functions (``add``, ``sub``, ...) and are also reachable
    through the usual operators.
    """

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        if not (_finite(self.a) and _finite(self.b) and _finite(self.c)):
            raise ValidationError(
                f"components must be finite numbers, got ({self.a!r}, {self.b!r}, {self.c!r})"
            )
        a, b, c = _canonical(self.a), _canonical(self.b), _canonical(self.c)
        if not a <= b <= c:
            raise ValidationError(f"components must satisfy a <= b <= c, got ({a}, {b}, {c})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def is_crisp(self) -> bool:
        """True when the value degenerates to a single real (``a == c``)."""
        return self.a == self.c

    def __add__(self, other):
        rhs = _to_tfn(other)
        return add(self, rhs) if rhs is not None else NotImplemented

    def __radd__(self, other):
        lhs = _to_tfn(other)
        return add(lhs, self) if lhs is not None else NotImplemented

    def __sub__(self, other):
        rhs = _to_tfn(other)
        return sub(self, rhs) if rhs is not None else NotImplemented

    def __rsub__(self, other):
        lhs = _to_tfn(other)
        return sub(lhs, self) if lhs is not None else NotImplemented

    def __neg__(self) -> "TFN":
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, (TFN, CrispScalar, int, float)):
            return crisp_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__  # crisp scaling commutes

    def __truediv__(self, other):
        if isinstance(other, (TFN, CrispScalar, int, float)):
            return crisp_div(self, other)
        return NotImplemented


@dataclass(frozen=True, slots=True)
class CrispScalar:
    """A real ``r`` viewed as the crisp fuzzy number ``(r, r, r)``.

    The embedding is injective and the crisp numbers behave exactly like
    the reals, which is what lets them play the role of scalars.
    """

    r: float

    def __post_init__(self) -> None:
        if not _finite(self.r):
            raise ValidationError(f"crisp scalar must be a finite number, got {self.r!r}")
        object.__setattr__(self, "r", _canonical(self.r))

    def as_tfn(self) -> TFN:
        return TFN(self.r, self.r, self.r)

    def __float__(self) -> float:
        return self.r


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed real interval ``[lo, hi]``; the carrier of alpha-cuts."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (_finite(self.lo) and _finite(self.hi)):
            raise ValidationError(f"interval bounds must be finite, got [{self.lo!r}, {self.hi!r}]")
        lo, hi = _canonical(self.lo), _canonical(self.hi)
        if not lo <= hi:
            raise ValidationError(f"interval bounds must satisfy lo <= hi, got [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)


ZERO = TFN(0.0, 0.0, 0.0)


def _to_tfn(value) -> TFN | None:
    if isinstance(value, TFN):
        return value
    if isinstance(value, CrispScalar):
        return value.as_tfn()
    if isinstance(value, (int, float)):
        return TFN(value, value, value)
    return None


def _scalar(value) -> float:
    """Extract the real behind a crisp operand; reject non-crisp TFNs."""
    if isinstance(value, CrispScalar):
        return value.r
    if isinstance(value, TFN):
        if value.is_crisp:
            return value.b
        raise DomainError(
            f"scalar operand must be crisp, got the non-crisp TFN ({value.a}, {value.b}, {value.c})"
        )
    if isinstance(value, (int, float)):
        if not math.isfinite(value):
            raise ValidationError(f"scalar must be finite, got {value!r}")
        return float(value)
    raise TypeError(f"expected a crisp scalar, got {type(value).__name__}")


def _checked(a: float, b: float, c: float) -> TFN:
    # overflow to +/-inf is the only way componentwise arithmetic on valid
    # inputs can leave the type
    if not (math.isfinite(a) and math.isfinite(b) and math.isfinite(c)):
        raise OverflowError(f"arithmetic produced a non-finite component: ({a}, {b}, {c})")
    return TFN(a, b, c)


def make_tfn(a: float, b: float, c: float) -> TFN:
    """Validated constructor; synonym for ``TFN(a, b, c)``."""
    return TFN(a, b, c)


def membership(tfn: TFN, x: float) -> float:
    """Degree of membership of ``x`` in ``tfn``, in ``[0, 1]``.

    1 exactly at the peak, linear on the open ramps, 0 at and beyond the
    endpoints.  A degenerate ramp (``a == b`` or ``b == c``) is a vertical
    edge: the value is 1 at ``b`` and 0 on the far side, with no division
    by the zero ramp width.
    """
    if x == tfn.b:
        return 1.0
    if not math.isfinite(x) or x <= tfn.a or x >= tfn.c:
        return 0.0
    if x < tfn.b:
        return (x - tfn.a) / (tfn.b - tfn.a)
    return (tfn.c - x) / (tfn.c - tfn.b)


def alpha_cut(tfn: TFN, alpha: float) -> Interval:
    """The level set ``{x : membership(tfn, x) >= alpha}`` for ``alpha`` in ``]0, 1]``.

    Evaluated as the affine blend ``[(1-alpha)*a + alpha*b, (1-alpha)*c + alpha*b]``:
    algebraically identical to ``[a + alpha*(b-a), c - alpha*(c-b)]`` but the
    shared ``alpha*b`` term keeps ``lo <= hi`` under rounding and makes the
    cut at level 1 exactly ``[b, b]``.
    """
    if not (isinstance(alpha, (int, float)) and 0.0 < alpha <= 1.0):
        raise DomainError(f"alpha must lie in ]0, 1], got {alpha!r}")
    w = 1.0 - alpha
    peak = alpha * tfn.b
    return Interval(w * tfn.a + peak, w * tfn.c + peak)


def add(lhs: TFN, rhs: TFN) -> TFN:
    """Componentwise sum ``(a1+a2, b1+b2, c1+c2)``."""
    return _checked(lhs.a + rhs.a, lhs.b + rhs.b, lhs.c + rhs.c)


def sub(lhs: TFN, rhs: TFN) -> TFN:
    """Cross subtraction ``(a1-c2, b1-b2, c1-a2)``; equals ``add(lhs, neg(rhs))``."""
    return _checked(lhs.a - rhs.c, lhs.b - rhs.b, lhs.c - rhs.a)


def neg(tfn: TFN) -> TFN:
    """Reflection through zero: ``-(a, b, c) = (-c, -b, -a)``."""
    return TFN(-tfn.c, -tfn.b, -tfn.a)


def scalar_mul(r, tfn: TFN) -> TFN:
    """Crisp scaling: ``(ra, rb, rc)`` for ``r >= 0``, endpoints swapped for ``r < 0``."""
    factor = _scalar(r)
    if factor >= 0:
        return _checked(factor * tfn.a, factor * tfn.b, factor * tfn.c)
    return _checked(factor * tfn.c, factor * tfn.b, factor * tfn.a)


def crisp_mul(tfn: TFN, r) -> TFN:
    """Product with a crisp operand, the only product closed on TFNs."""
    return scalar_mul(r, tfn)


def crisp_div(tfn: TFN, r) -> TFN:
    """Division by a nonzero crisp ``r``; endpoints swap when ``r < 0``."""
    divisor = _scalar(r)
    if divisor == 0:
        raise DivisionByZero("division by crisp zero (0 lies in the divisor support)")
    if divisor > 0:
        return _checked(tfn.a / divisor, tfn.b / divisor, tfn.c / divisor)
    return _checked(tfn.c / divisor, tfn.b / divisor, tfn.a / divisor)


def repeat_add(tfn: TFN, n: int) -> TFN:
    """The n-fold sum ``A + A + ... + A``, which collapses to crisp scaling by ``n``."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    return scalar_mul(n, tfn)


def is_zero_isosceles(tfn: TFN) -> bool:
    """True iff the value has the form ``(-h, 0, h)``, ``h >= 0``.

    These are exactly the values ``A - A`` can take, so they play the role
    of "zero up to spread" for the subtraction that never truly inverts.
    """
    return tfn.b == 0.0 and tfn.a == -tfn.c
