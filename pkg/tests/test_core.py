"""Value types and closed-form arithmetic: frozen examples and error paths."""

import math

import pytest

from tfnkit import (
    TFN,
    ZERO,
    CrispScalar,
    DivisionByZero,
    DomainError,
    Interval,
    OverflowError,
    ValidationError,
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


class TestConstruction:
    def test_simple_triple(self):
        assert make_tfn(1, 2, 3) == TFN(1.0, 2.0, 3.0)

    def test_crisp_embedding(self):
        assert make_tfn(0, 0, 0) == CrispScalar(0).as_tfn() == ZERO

    def test_rejects_unordered(self):
        with pytest.raises(ValidationError):
            make_tfn(3, 2, 1)
        with pytest.raises(ValidationError):
            make_tfn(1, 3, 2)

    @pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
    def test_rejects_non_finite(self, bad):
        with pytest.raises(ValidationError):
            make_tfn(bad, 0, 1)
        with pytest.raises(ValidationError):
            make_tfn(0, bad, 1)
        with pytest.raises(ValidationError):
            CrispScalar(bad)

    def test_negative_zero_is_canonicalized(self):
        tfn = TFN(-0.0, 0.0, 0.0)
        assert repr(tfn.a) == "0.0"
        assert tfn == ZERO

    def test_interval_invariant(self):
        Interval(1.0, 1.0)
        with pytest.raises(ValidationError):
            Interval(2.0, 1.0)

    def test_values_are_immutable(self):
        tfn = TFN(1, 2, 3)
        with pytest.raises(AttributeError):
            tfn.a = 0.0


class TestMembership:
    def test_peak_is_one(self):
        assert membership(TFN(0, 1, 2), 1.0) == 1.0

    def test_left_ramp(self):
        # (x - a) / (b - a) evaluated by hand at midpoint
        assert membership(TFN(0, 1, 2), 0.5) == 0.5

    def test_outside_support(self):
        assert membership(TFN(0, 1, 2), 3.0) == 0.0
        assert membership(TFN(0, 1, 2), -1.0) == 0.0

    def test_degenerate_left_ramp(self):
        assert membership(TFN(1, 1, 2), 1.0) == 1.0
        assert membership(TFN(1, 1, 2), 0.999) == 0.0

    def test_degenerate_right_ramp(self):
        assert membership(TFN(0, 1, 1), 1.0) == 1.0
        assert membership(TFN(0, 1, 1), 1.001) == 0.0

    def test_crisp_spike(self):
        assert membership(TFN(2, 2, 2), 2.0) == 1.0
        assert membership(TFN(2, 2, 2), 2.0000001) == 0.0

    def test_endpoints_are_outside(self):
        assert membership(TFN(0, 1, 2), 0.0) == 0.0
        assert membership(TFN(0, 1, 2), 2.0) == 0.0


class TestAlphaCut:
    def test_full_cut_is_peak(self):
        assert alpha_cut(TFN(0, 1, 2), 1.0) == Interval(1.0, 1.0)

    def test_midlevel(self):
        assert alpha_cut(TFN(0, 1, 2), 0.5) == Interval(0.5, 1.5)

    def test_crisp(self):
        assert alpha_cut(TFN(2, 2, 2), 0.3) == Interval(2.0, 2.0)

    @pytest.mark.parametrize("alpha", [0.0, -0.1, 1.0000001, math.nan, math.inf])
    def test_rejects_alpha_outside_domain(self, alpha):
        with pytest.raises(DomainError):
            alpha_cut(TFN(0, 1, 2), alpha)

    def test_full_cut_exact_even_for_awkward_floats(self):
        tfn = TFN(0.1, 0.30000000000000004, 0.7)
        cut = alpha_cut(tfn, 1.0)
        assert cut.lo == tfn.b and cut.hi == tfn.b


class TestArithmetic:
    def test_add(self):
        # verified against the alpha-cut interval oracle in test_oracle
        assert add(TFN(1, 2, 3), TFN(0, 1, 2)) == TFN(1, 3, 5)

    def test_add_identity(self):
        assert add(TFN(1, 2, 3), ZERO) == TFN(1, 2, 3)

    def test_sub_paper_pair(self):
        assert sub(TFN(1, 2, 4), TFN(1, 2, 3)) == TFN(-2, 0, 3)

    def test_sub_crisp_cancels(self):
        assert sub(CrispScalar(2.5).as_tfn(), CrispScalar(2.5).as_tfn()) == ZERO

    def test_sub_self_spreads(self):
        diff = sub(TFN(0, 1, 2), TFN(0, 1, 2))
        assert diff == TFN(-2, 0, 2)
        assert is_zero_isosceles(diff)

    def test_neg(self):
        assert neg(TFN(1, 2, 3)) == TFN(-3, -2, -1)
        assert neg(ZERO) == ZERO

    def test_neg_zero_isosceles_fixed_point(self):
        assert neg(TFN(-1, 0, 1)) == TFN(-1, 0, 1)

    def test_scalar_mul(self):
        # cross-checked by the scaled alpha-cut oracle in test_oracle
        assert scalar_mul(2, TFN(1, 2, 3)) == TFN(2, 4, 6)

    def test_scalar_mul_annihilates(self):
        assert scalar_mul(0, TFN(1, 2, 3)) == ZERO

    def test_scalar_mul_negative_is_neg(self):
        assert scalar_mul(-1, TFN(1, 2, 3)) == TFN(-3, -2, -1)
        assert scalar_mul(CrispScalar(-1), TFN(1, 2, 3)) == neg(TFN(1, 2, 3))

    def test_crisp_mul_matches_scalar_mul(self):
        for r in (2, 0, -1, 0.5):
            assert crisp_mul(TFN(1, 2, 3), r) == scalar_mul(r, TFN(1, 2, 3))

    def test_crisp_mul_rejects_non_crisp_operand(self):
        with pytest.raises(DomainError):
            crisp_mul(TFN(1, 2, 3), TFN(0, 1, 2))

    def test_crisp_div_round_trip(self):
        assert crisp_div(TFN(2, 4, 6), 2) == TFN(1, 2, 3)
        assert crisp_div(scalar_mul(2, TFN(1, 2, 3)), 2) == TFN(1, 2, 3)

    def test_crisp_div_identity(self):
        assert crisp_div(TFN(1, 2, 3), 1) == TFN(1, 2, 3)

    def test_crisp_div_by_zero(self):
        with pytest.raises(DivisionByZero):
            crisp_div(TFN(1, 2, 3), 0)
        with pytest.raises(ZeroDivisionError):  # builtin alias still works
            crisp_div(TFN(1, 2, 3), CrispScalar(0.0))

    def test_crisp_div_negative_flips(self):
        assert crisp_div(TFN(2, 4, 6), -2) == TFN(-3, -2, -1)

    def test_overflow_is_reported(self):
        huge = TFN(1e308, 1e308, 1e308)
        with pytest.raises(OverflowError):
            add(huge, huge)
        with pytest.raises(OverflowError):
            scalar_mul(1e308, TFN(10, 10, 10))


class TestRepeatAdd:
    def test_triples_via_fold_oracle(self):
        # fold of add is the defining route; on integer components it is exact
        tfn = TFN(1, 2, 3)
        folded = tfn
        for _ in range(2):
            folded = add(folded, tfn)
        assert folded == TFN(3, 6, 9)
        assert repeat_add(tfn, 3) == folded

    def test_single(self):
        assert repeat_add(TFN(1, 2, 3), 1) == TFN(1, 2, 3)

    def test_zero_absorbs(self):
        for n in (1, 2, 7):
            assert repeat_add(ZERO, n) == ZERO

    @pytest.mark.parametrize("n", [0, -1, 2.0, True])
    def test_rejects_bad_count(self, n):
        with pytest.raises(DomainError):
            repeat_add(TFN(1, 2, 3), n)


class TestZeroIsosceles:
    def test_symmetric(self):
        assert is_zero_isosceles(TFN(-2, 0, 2))

    def test_crisp_zero(self):
        assert is_zero_isosceles(ZERO)

    def test_asymmetric(self):
        assert not is_zero_isosceles(TFN(-1, 0, 2))

    def test_nonzero_peak(self):
        assert not is_zero_isosceles(TFN(-1, 1, 1))


class TestOperators:
    """The dunder layer is a thin veneer over the module functions."""

    def test_add_sub_neg(self):
        assert TFN(1, 2, 3) + TFN(0, 1, 2) == add(TFN(1, 2, 3), TFN(0, 1, 2))
        assert TFN(1, 2, 4) - TFN(1, 2, 3) == TFN(-2, 0, 3)
        assert -TFN(1, 2, 3) == TFN(-3, -2, -1)

    def test_crisp_coercion(self):
        assert TFN(1, 2, 3) + 1 == TFN(2, 3, 4)
        assert 1 + TFN(1, 2, 3) == TFN(2, 3, 4)
        assert TFN(1, 2, 3) + CrispScalar(1) == TFN(2, 3, 4)

    def test_scaling_operators(self):
        assert 2 * TFN(1, 2, 3) == TFN(2, 4, 6)
        assert TFN(1, 2, 3) * 2 == TFN(2, 4, 6)
        assert TFN(2, 4, 6) / 2 == TFN(1, 2, 3)

    def test_product_of_two_fuzzy_values_is_rejected(self):
        with pytest.raises(DomainError):
            TFN(1, 2, 3) * TFN(1, 2, 3)
        # a crisp TFN operand is fine: it is a scalar in disguise
        assert TFN(1, 2, 3) * TFN(2, 2, 2) == TFN(2, 4, 6)

    def test_foreign_types_not_implemented(self):
        with pytest.raises(TypeError):
            TFN(1, 2, 3) + "nope"
