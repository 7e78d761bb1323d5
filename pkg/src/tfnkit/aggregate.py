"""Averaging aggregators on TFN tuples and randomized law checks.

An aggregator maps an n-tuple of TFNs to a single TFN.  The built-in
arithmetic and weighted means are averages in the order-theoretic sense:
idempotent, order-preserving, and pinned between the componentwise min and
max under the total order.

The ``*_witness`` functions are seeded falsification searches.  A ``True``
verdict means no counterexample was found over the sampled trials; it is
evidence, not proof.  A returned counterexample, on the other hand, is
definitive.  Trials mix continuous and integer-valued samples: the integer
ones make exact-equality assertions meaningful (their arithmetic stays
exact in double precision at the sampled magnitudes).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Iterable

from .core import TFN, ZERO, CrispScalar, add, crisp_div, scalar_mul
from .errors import DimensionMismatch, DomainError, ValidationError
from .order import OrderResult, compare_ot, leq_ot, ot_max, ot_min
from .vector import TFNVector, vec_compare_otn

__all__ = [
    "WEIGHT_SUM_TOLERANCE",
    "WeightVector",
    "Aggregator",
    "WitnessReport",
    "arithmetic_mean",
    "weighted_mean",
    "mean_aggregator",
    "weighted_mean_aggregator",
    "fta_bounds_check",
    "is_ot_increasing_witness",
    "is_idempotent_witness",
]

WEIGHT_SUM_TOLERANCE = 1e-12


@dataclass(frozen=True, slots=True)
class WeightVector:
    """Nonnegative crisp weights summing to one.

    The sum must hit 1 within ``WEIGHT_SUM_TOLERANCE``; weights are stored
    exactly as given, never renormalized, so a bad sum fails loudly here
    instead of silently skewing every aggregation downstream.
    """

    weights: tuple[CrispScalar, ...]

    def __post_init__(self) -> None:
        coerced = tuple(
            w if isinstance(w, CrispScalar) else CrispScalar(w) for w in self.weights
        )
        if len(coerced) < 1:
            raise ValidationError("a weight vector needs at least one weight")
        for i, w in enumerate(coerced):
            if w.r < 0:
                raise ValidationError(f"weight {i} is negative: {w.r}")
        total = math.fsum(w.r for w in coerced)
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise ValidationError(
                f"weights must sum to 1 within {WEIGHT_SUM_TOLERANCE}, got {total!r}"
            )
        object.__setattr__(self, "weights", coerced)

    @classmethod
    def uniform(cls, n: int) -> "WeightVector":
        if n < 1:
            raise ValidationError(f"need at least one weight, got {n}")
        return cls((CrispScalar(1.0 / n),) * n)

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(w.r for w in self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)


@dataclass(frozen=True, slots=True)
class Aggregator:
    """A fixed-arity map from TFN tuples to a single TFN."""

    arity: int
    evaluate: Callable[[TFNVector], TFN]

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValidationError(f"arity must be at least 1, got {self.arity}")

    def __call__(self, vec: TFNVector) -> TFN:
        if len(vec) != self.arity:
            raise DimensionMismatch(f"aggregator arity {self.arity}, got tuple of {len(vec)}")
        return self.evaluate(vec)


def _components(items: TFNVector | Iterable[TFN]) -> tuple[TFN, ...]:
    comps = tuple(items)
    if not comps:
        raise DimensionMismatch("cannot aggregate an empty tuple")
    return comps


def arithmetic_mean(items: TFNVector | Iterable[TFN]) -> TFN:
    """Sum of all components divided by crisp n (sum first, divide once)."""
    comps = _components(items)
    return crisp_div(reduce(add, comps), len(comps))


def weighted_mean(weights: WeightVector, items: TFNVector | Iterable[TFN]) -> TFN:
    """The weighted sum ``w1*A1 + ... + wn*An``."""
    comps = _components(items)
    if len(weights) != len(comps):
        raise DimensionMismatch(f"{len(weights)} weights for {len(comps)} components")
    acc = ZERO
    for w, item in zip(weights, comps):
        acc = add(acc, scalar_mul(w, item))
    return acc


def mean_aggregator(arity: int) -> Aggregator:
    return Aggregator(arity, arithmetic_mean)


def weighted_mean_aggregator(weights: WeightVector) -> Aggregator:
    return Aggregator(len(weights), lambda vec: weighted_mean(weights, vec))


def fta_bounds_check(agg: Aggregator, vec: TFNVector) -> bool:
    """Is the aggregate pinned between the min and max of its arguments?"""
    value = agg(vec)
    lo = reduce(ot_min, vec.components)
    hi = reduce(ot_max, vec.components)
    return leq_ot(lo, value) and leq_ot(value, hi)


@dataclass(frozen=True, slots=True)
class WitnessReport:
    """Outcome of a falsification search; truthy iff no counterexample."""

    ok: bool
    counterexample: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


# Sampling bounds for the witnesses.  Magnitudes stay within 1e6 so integer
# samples stay exact in double precision through sums and products, and
# perturbation margins stay at least 0.1 so rounding can never invert a
# comparison that holds in exact arithmetic.
_MAGNITUDE = 10.0**6
_INT_MAGNITUDE = 10**6


def _sample_tfn(rng: random.Random, integer: bool) -> TFN:
    if integer:
        vals = sorted(rng.randint(-_INT_MAGNITUDE, _INT_MAGNITUDE) for _ in range(3))
    else:
        vals = sorted(rng.uniform(-_MAGNITUDE, _MAGNITUDE) for _ in range(3))
    return TFN(*vals)


def _sample_vector(rng: random.Random, n: int) -> TFNVector:
    integer = rng.random() < 0.25
    return TFNVector(tuple(_sample_tfn(rng, integer) for _ in range(n)))


def _sample_increment(rng: random.Random) -> TFN:
    """Crisp zero or an OT-positive TFN; adding it never moves a value down."""
    kind = rng.random()
    if kind < 0.25:
        return ZERO
    if kind < 0.5:
        # zero peak, strictly positive right endpoint
        return TFN(-rng.uniform(0.1, 10.0), 0.0, rng.uniform(0.1, 10.0))
    peak = rng.uniform(0.1, 10.0)
    return TFN(peak - rng.uniform(0.0, 10.0), peak, peak + rng.uniform(0.0, 10.0))


def _dominating(rng: random.Random, vec: TFNVector) -> TFNVector:
    return TFNVector(tuple(add(x, _sample_increment(rng)) for x in vec))


def is_ot_increasing_witness(agg: Aggregator, trials: int, seed: int) -> WitnessReport:
    """Searches for a dominated pair that the aggregator maps out of order.

    Pairs are built as ``(U, U + P)`` with every increment of ``P`` either
    crisp zero or OT-positive, which guarantees componentwise domination by
    the translation law; the counterexample, if any, is ``(U, V)``.
    """
    if trials < 1:
        raise DomainError(f"trials must be at least 1, got {trials}")
    rng = random.Random(seed)
    for _ in range(trials):
        u = _sample_vector(rng, agg.arity)
        v = _dominating(rng, u)
        assert vec_compare_otn(u, v)
        if compare_ot(agg(u), agg(v)) is OrderResult.GT:
            return WitnessReport(False, (u, v))
    return WitnessReport(True)


def _close(x: float, y: float) -> bool:
    return math.isclose(x, y, rel_tol=1e-9, abs_tol=1e-9)


def is_idempotent_witness(agg: Aggregator, trials: int, seed: int) -> WitnessReport:
    """Searches for ``A`` with ``E(A, ..., A) != A``.

    Integer-valued samples are compared exactly; continuous ones within a
    1e-9 relative tolerance, since even an honest average accumulates a few
    ulps of rounding.  The counterexample, if any, is ``(A, E(A, ..., A))``.
    """
    if trials < 1:
        raise DomainError(f"trials must be at least 1, got {trials}")
    rng = random.Random(seed)
    for _ in range(trials):
        exact = rng.random() < 0.5
        a = _sample_tfn(rng, integer=exact)
        out = agg(TFNVector((a,) * agg.arity))
        if exact:
            if out != a:
                return WitnessReport(False, (a, out))
        elif not (_close(out.a, a.a) and _close(out.b, a.b) and _close(out.c, a.c)):
            return WitnessReport(False, (a, out))
    return WitnessReport(True)
