"""Fixed-length tuples of TFNs with componentwise operations.

Addition and crisp scaling act component by component; the induced order
``vec_compare_otn`` is the componentwise total-order comparison and is only
a partial order for n > 1.  The structure is deliberately not a vector
space: ``U + (-1)*U`` equals the zero tuple only when every component is
crisp, because TFN subtraction never cancels spread.  General ``U - V`` is
spelled ``vec_add(U, vec_scalar_mul(-1, V))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import TFN, ZERO, add, scalar_mul, sub
from .errors import DimensionMismatch, ValidationError
from .order import leq_ot

__all__ = [
    "TFNVector",
    "zero_vector",
    "vec_add",
    "vec_scalar_mul",
    "vec_compare_otn",
    "vec_self_diff",
]


@dataclass(frozen=True, slots=True)
class TFNVector:
    """An ordered, non-empty tuple of TFNs."""

    components: tuple[TFN, ...]

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        if len(comps) < 1:
            raise ValidationError("a TFN tuple needs at least one component")
        for i, item in enumerate(comps):
            if not isinstance(item, TFN):
                raise ValidationError(f"component {i} is not a TFN: {item!r}")
        object.__setattr__(self, "components", comps)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[TFN]:
        return iter(self.components)

    def __getitem__(self, index: int) -> TFN:
        return self.components[index]


def zero_vector(n: int) -> TFNVector:
    """The additive identity: n copies of crisp zero."""
    if n < 1:
        raise ValidationError(f"length must be at least 1, got {n}")
    return TFNVector((ZERO,) * n)


def _require_same_length(lhs: TFNVector, rhs: TFNVector) -> None:
    if len(lhs) != len(rhs):
        raise DimensionMismatch(f"tuple lengths differ: {len(lhs)} vs {len(rhs)}")


def vec_add(lhs: TFNVector, rhs: TFNVector) -> TFNVector:
    """Componentwise sum."""
    _require_same_length(lhs, rhs)
    return TFNVector(tuple(add(x, y) for x, y in zip(lhs, rhs)))


def vec_scalar_mul(r, vec: TFNVector) -> TFNVector:
    """Componentwise crisp scaling."""
    return TFNVector(tuple(scalar_mul(r, x) for x in vec))


def vec_compare_otn(lhs: TFNVector, rhs: TFNVector) -> bool:
    """Componentwise total-order ``<=`` (a partial order on tuples)."""
    _require_same_length(lhs, rhs)
    return all(leq_ot(x, y) for x, y in zip(lhs, rhs))


def vec_self_diff(vec: TFNVector) -> TFNVector:
    """``U - U`` componentwise; every component lands on ``(-h, 0, h)``."""
    return TFNVector(tuple(sub(x, x) for x in vec))
