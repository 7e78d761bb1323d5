"""The natural partial order and the total order on TFNs.

``leq_natural`` is the componentwise order: it leaves many pairs
incomparable.  ``compare_ot`` is a total order that refines it, comparing
lexicographically on ``(b, c, a)``: peak first, then right endpoint, then
left endpoint.

All comparisons are exact float comparisons.  Values that are meant to tie
must be constructed tie-exact; there is deliberately no epsilon anywhere in
this module, since a tolerance would break antisymmetry and totality.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Iterable, TypeVar

from .core import TFN

__all__ = [
    "OrderResult",
    "SignClass",
    "leq_natural",
    "compare_ot",
    "leq_ot",
    "classify_sign",
    "ot_max",
    "ot_min",
    "ot_sort",
    "sort_key",
]

T = TypeVar("T")


class OrderResult(Enum):
    """Three-way comparison outcome; EQ only for identical triples."""

    LT = -1
    EQ = 0
    GT = 1


class SignClass(Enum):
    """Position of a TFN relative to crisp zero under the total order."""

    OT_POSITIVE = "positive"
    OT_NEGATIVE = "negative"
    ZERO = "zero"


def sort_key(tfn: TFN) -> tuple[float, float, float]:
    """The lexicographic key ``(b, c, a)`` realising the total order."""
    return (tfn.b, tfn.c, tfn.a)


def leq_natural(lhs: TFN, rhs: TFN) -> bool:
    """Componentwise ``<=`` on all three components (a partial order)."""
    return lhs.a <= rhs.a and lhs.b <= rhs.b and lhs.c <= rhs.c


def compare_ot(lhs: TFN, rhs: TFN) -> OrderResult:
    """Total comparison: lexicographic on ``(b, c, a)``."""
    lk = sort_key(lhs)
    rk = sort_key(rhs)
    if lk < rk:
        return OrderResult.LT
    if lk > rk:
        return OrderResult.GT
    return OrderResult.EQ


def leq_ot(lhs: TFN, rhs: TFN) -> bool:
    """Convenience for ``compare_ot(lhs, rhs) in {LT, EQ}``."""
    return sort_key(lhs) <= sort_key(rhs)


def classify_sign(tfn: TFN) -> SignClass:
    """Exactly one of positive / negative / zero, agreeing with ``compare_ot``
    against crisp zero."""
    if tfn.b > 0.0 or (tfn.b == 0.0 and tfn.c > 0.0):
        return SignClass.OT_POSITIVE
    if tfn.b < 0.0 or (tfn.b == 0.0 and tfn.c == 0.0 and tfn.a < 0.0):
        return SignClass.OT_NEGATIVE
    return SignClass.ZERO


def ot_max(lhs: TFN, rhs: TFN) -> TFN:
    """The larger argument; ties return the first for determinism."""
    return rhs if compare_ot(lhs, rhs) is OrderResult.LT else lhs


def ot_min(lhs: TFN, rhs: TFN) -> TFN:
    """The smaller argument; ties return the first for determinism."""
    return rhs if compare_ot(lhs, rhs) is OrderResult.GT else lhs


def ot_sort(items: Iterable[T], key: Callable[[T], TFN] | None = None) -> list[T]:
    """Stable ascending sort under the total order.

    ``key`` extracts the TFN from wrapper objects (records, pairs); by
    default the items are the TFNs themselves.
    """
    if key is None:
        return sorted(items, key=sort_key)
    return sorted(items, key=lambda item: sort_key(key(item)))
