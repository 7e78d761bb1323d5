"""Brute-force reconstruction of TFN arithmetic, for verification only.

Two independent routes re-derive what the closed forms in :mod:`tfnkit.core`
compute:

* interval arithmetic on alpha-cuts over a fixed grid of levels, and
* direct sup-min convolution of the membership functions, evaluated by grid
  search over the support.

An error in one closed form cannot hide behind the same error in the other
route.  This module ships with the library but exists for the test suite;
production code should never need it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import TFN, Interval, alpha_cut
from .errors import DomainError, ValidationError

__all__ = [
    "AlphaGrid",
    "DEFAULT_GRID",
    "oracle_add",
    "oracle_sub",
    "oracle_scalar_mul",
    "oracle_membership_convolution",
]

CutSeries = list[tuple[float, Interval]]


@dataclass(frozen=True, slots=True)
class AlphaGrid:
    """Ascending alpha levels in ``]0, 1]``; the top level must be 1."""

    levels: tuple[float, ...] = tuple(i / 10 for i in range(1, 11))

    def __post_init__(self) -> None:
        levels = tuple(float(level) for level in self.levels)
        if not levels:
            raise ValidationError("alpha grid must contain at least one level")
        for level in levels:
            if not 0.0 < level <= 1.0:
                raise ValidationError(f"alpha level out of ]0, 1]: {level!r}")
        if any(x >= y for x, y in zip(levels, levels[1:])):
            raise ValidationError(f"alpha levels must be strictly ascending: {levels}")
        if levels[-1] != 1.0:
            raise ValidationError(f"last alpha level must be 1, got {levels[-1]!r}")
        object.__setattr__(self, "levels", levels)


DEFAULT_GRID = AlphaGrid()


def oracle_add(lhs: TFN, rhs: TFN, grid: AlphaGrid = DEFAULT_GRID) -> CutSeries:
    """Interval sum of the operands' alpha-cuts per grid level."""
    out = []
    for level in grid.levels:
        x = alpha_cut(lhs, level)
        y = alpha_cut(rhs, level)
        out.append((level, Interval(x.lo + y.lo, x.hi + y.hi)))
    return out


def oracle_sub(lhs: TFN, rhs: TFN, grid: AlphaGrid = DEFAULT_GRID) -> CutSeries:
    """Interval difference ``[lo1 - hi2, hi1 - lo2]`` per grid level."""
    out = []
    for level in grid.levels:
        x = alpha_cut(lhs, level)
        y = alpha_cut(rhs, level)
        out.append((level, Interval(x.lo - y.hi, x.hi - y.lo)))
    return out


def oracle_scalar_mul(r: float, tfn: TFN, grid: AlphaGrid = DEFAULT_GRID) -> CutSeries:
    """Scaled alpha-cuts ``r * [lo, hi]``, flipped when ``r < 0``."""
    factor = float(r)
    out = []
    for level in grid.levels:
        x = alpha_cut(tfn, level)
        if factor >= 0:
            out.append((level, Interval(factor * x.lo, factor * x.hi)))
        else:
            out.append((level, Interval(factor * x.hi, factor * x.lo)))
    return out


def _membership_grid(tfn: TFN, xs: np.ndarray) -> np.ndarray:
    # same piecewise-linear definition as core.membership, vectorized;
    # degenerate ramps contribute nothing beyond the peak spike
    vals = np.zeros_like(xs)
    if tfn.b > tfn.a:
        m = (xs > tfn.a) & (xs < tfn.b)
        vals[m] = (xs[m] - tfn.a) / (tfn.b - tfn.a)
    if tfn.c > tfn.b:
        m = (xs > tfn.b) & (xs < tfn.c)
        vals[m] = (tfn.c - xs[m]) / (tfn.c - tfn.b)
    vals[xs == tfn.b] = 1.0
    return vals


def oracle_membership_convolution(
    lhs: TFN, rhs: TFN, op: str, x: float, samples: int = 10_000
) -> float:
    """Grid-search supremum of ``min(A(y), B(z))`` with ``z`` tied to ``x``.

    For ``op="add"`` the constraint is ``x = y + z``; for ``op="sub"`` it is
    ``x = y - z``.  Every evaluated point is a true value of the objective,
    so the result approaches the exact membership of ``x`` in the combined
    number from below as ``samples`` grows.  The searched range is the left
    operand's support padded by 1e-9, plus the finitely many points where a
    ramp corner of either operand is hit exactly.
    """
    if op not in ("add", "sub"):
        raise DomainError(f"op must be 'add' or 'sub', got {op!r}")
    if samples < 100:
        raise DomainError(f"samples must be at least 100, got {samples}")
    pad = 1e-9
    ys = np.linspace(lhs.a - pad, lhs.c + pad, samples)
    if op == "add":
        corners = [x - rhs.a, x - rhs.b, x - rhs.c]
    else:
        corners = [x + rhs.a, x + rhs.b, x + rhs.c]
    ys = np.concatenate([ys, [lhs.a, lhs.b, lhs.c], corners])
    zs = x - ys if op == "add" else ys - x
    vals = np.minimum(_membership_grid(lhs, ys), _membership_grid(rhs, zs))
    return float(vals.max())
