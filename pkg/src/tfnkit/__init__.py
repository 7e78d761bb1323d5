"""Triangular fuzzy number arithmetic, ordering and aggregation.

The building blocks:

* :mod:`tfnkit.core` -- the TFN value type, membership, alpha-cuts, and the
  closed-form arithmetic (add, cross-subtract, crisp scale/divide).
* :mod:`tfnkit.order` -- the componentwise partial order and the total
  order that refines it, plus sign classification and min/max/sort.
* :mod:`tfnkit.vector` -- fixed-length TFN tuples with componentwise
  operations and the componentwise order.
* :mod:`tfnkit.aggregate` -- arithmetic and weighted means, the
  average-function bounds check, and seeded law-falsification witnesses.
* :mod:`tfnkit.oracle` -- brute-force alpha-cut and sup-min reconstructions
  of the arithmetic, used by the test suite to cross-check every closed form.
* :mod:`tfnkit.cli` -- the ``tfnkit`` command.
"""

from .aggregate import (
    WEIGHT_SUM_TOLERANCE,
    Aggregator,
    WeightVector,
    WitnessReport,
    arithmetic_mean,
    fta_bounds_check,
    is_idempotent_witness,
    is_ot_increasing_witness,
    mean_aggregator,
    weighted_mean,
    weighted_mean_aggregator,
)
from .core import (
    TFN,
    ZERO,
    CrispScalar,
    Interval,
    add,
    alpha_cut,
    crisp_div,
    crisp_mul,
    is_zero_isosceles,
    make_tfn,
    membership,
    neg,
    repeat_add,
    scalar_mul,
    sub,
)
from .errors import (
    DimensionMismatch,
    DivisionByZero,
    DomainError,
    OverflowError,
    ParseError,
    TFNError,
    ValidationError,
)
from .oracle import (
    DEFAULT_GRID,
    AlphaGrid,
    oracle_add,
    oracle_membership_convolution,
    oracle_scalar_mul,
    oracle_sub,
)
from .order import (
    OrderResult,
    SignClass,
    classify_sign,
    compare_ot,
    leq_natural,
    leq_ot,
    ot_max,
    ot_min,
    ot_sort,
    sort_key,
)
from .vector import (
    TFNVector,
    vec_add,
    vec_compare_otn,
    vec_scalar_mul,
    vec_self_diff,
    zero_vector,
)

__version__ = "0.1.0"

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
    "TFNVector",
    "zero_vector",
    "vec_add",
    "vec_scalar_mul",
    "vec_compare_otn",
    "vec_self_diff",
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
    "AlphaGrid",
    "DEFAULT_GRID",
    "oracle_add",
    "oracle_sub",
    "oracle_scalar_mul",
    "oracle_membership_convolution",
    "TFNError",
    "ValidationError",
    "DomainError",
    "DimensionMismatch",
    "ParseError",
    "DivisionByZero",
    "OverflowError",
    "__version__",
]
