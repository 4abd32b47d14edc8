import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from singwell.surd import (IncompatibleRadicandError, SurdSqrt, SurdValue,
                           square_free_split)


def test_square_free_split():
    assert square_free_split(0) == (1, 0)
    assert square_free_split(1) == (1, 1)
    assert square_free_split(8) == (2, 2)
    assert square_free_split(360) == (6, 10)
    assert square_free_split(49) == (7, 1)
    with pytest.raises(ValueError):
        square_free_split(-3)


class TestNormalization:
    def test_gcd_reduction(self):
        assert SurdValue(2, 0, 0, 4) == SurdValue(1, 0, 0, 2)
        assert SurdValue(4, 2, 6, 8) == SurdValue(2, 1, 6, 4)

    def test_square_factor_extraction(self):
        assert SurdValue(0, 1, 8, 1) == SurdValue(0, 2, 2, 1)
        assert SurdValue(0, 3, 12, 2) == SurdValue(0, 3, 3, 1)

    def test_perfect_square_radicand_folds(self):
        assert SurdValue(1, 1, 9, 2) == SurdValue(4, 0, 0, 2)
        assert SurdValue(1, 1, 9, 2).is_rational

    def test_negative_denominator_flips(self):
        assert SurdValue(1, 2, 5, -3) == SurdValue(-1, -2, 5, 3)

    def test_zero_q_clears_radicand(self):
        assert SurdValue(3, 0, 7, 1).s == 0

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            SurdValue(1, 0, 0, 0)


class TestArithmetic:
    def test_float_image(self):
        v = SurdValue(3, 1, 6, 2)
        assert float(v) == pytest.approx((3 + math.sqrt(6)) / 2, rel=1e-15)

    def test_add_sub_same_radicand(self):
        a = SurdValue(1, 1, 6, 2)
        b = SurdValue(1, -1, 6, 3)
        assert float(a + b) == pytest.approx(float(a) + float(b), rel=1e-14)
        assert (a - a) == Fraction(0)

    def test_mul_div_same_radicand(self):
        a = SurdValue(3, 1, 6, 2)
        b = SurdValue(15, -1, 6, 2)
        prod = a * b
        assert float(prod) == pytest.approx(float(a) * float(b), rel=1e-14)
        assert (prod / b) == a

    def test_rational_operand(self):
        a = SurdValue(0, 1, 2, 2)           # sqrt(2)/2
        assert float(a * Fraction(3, 2)) == pytest.approx(0.75 * math.sqrt(2))
        assert (a * 2).square() == Fraction(2)
        assert (2 - SurdValue(1, 0, 0, 1)) == Fraction(1)

    def test_mixed_radicands_raise(self):
        with pytest.raises(IncompatibleRadicandError):
            SurdValue(0, 1, 2, 1) + SurdValue(0, 1, 3, 1)
        with pytest.raises(IncompatibleRadicandError):
            SurdValue(0, 1, 2, 1) * SurdValue(0, 1, 3, 1)

    def test_square_of_pure_root_is_rational(self):
        root_half = SurdValue(0, 1, 2, 2)
        sq = root_half.square()
        assert sq.is_rational and sq.as_fraction() == Fraction(1, 2)

    def test_squaring_closed_in_representation(self):
        v = SurdValue(3, 1, 6, 2)
        assert v.square() == SurdValue(15, 6, 6, 4)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            SurdValue(1, 0, 0, 1) / SurdValue(0, 0, 0, 1)

    def test_as_fraction_requires_rational(self):
        with pytest.raises(ValueError):
            SurdValue(0, 1, 2, 1).as_fraction()


class TestOrdering:
    def test_exact_sign(self):
        assert SurdValue(0, 1, 2, 1).sign() == 1
        assert SurdValue(-3, 2, 2, 1).sign() == -1     # 2*sqrt(2) = 2.83 < 3
        assert SurdValue(-1, 1, 2, 1).sign() == 1
        assert SurdValue(0, 0, 0, 1).sign() == 0

    def test_comparisons_against_rationals(self):
        root2 = SurdValue(0, 1, 2, 1)
        assert root2 > Fraction(7, 5)
        assert root2 < Fraction(3, 2)
        assert SurdValue(3, -1, 6, 2) < SurdValue(3, 1, 6, 2)


class TestSurdSqrt:
    def test_value_and_square(self):
        x = SurdSqrt(1, SurdValue(3, 1, 6, 2))
        assert float(x) == pytest.approx(math.sqrt((3 + math.sqrt(6)) / 2))
        assert x.square() == SurdValue(3, 1, 6, 2)
        assert float(-x) == -float(x)

    def test_rational_scaling_folds_square(self):
        x = SurdSqrt(1, SurdValue(1, 0, 0, 2))          # sqrt(1/2)
        assert float(x * Fraction(1, 8)) == pytest.approx(float(x) / 8)
        assert float(x / 8) == pytest.approx(float(x) / 8)
        assert (x * -2).sign == -1

    def test_denested(self):
        x = SurdSqrt(1, SurdValue(1, 0, 0, 2))
        assert x.denested() == SurdValue(0, 1, 2, 2)    # sqrt(2)/2
        nested = SurdSqrt(1, SurdValue(3, 1, 6, 2))
        assert nested.denested() is None

    def test_rejects_nonpositive_radicand(self):
        with pytest.raises(ValueError):
            SurdSqrt(1, SurdValue(-1, 0, 0, 2))
        with pytest.raises(ValueError):
            SurdSqrt(2, SurdValue(1, 0, 0, 2))

    def test_str_matches_table_style(self):
        assert str(SurdSqrt(1, SurdValue(1, 0, 0, 2))) == "√(1/2)"
        assert str(-SurdSqrt(1, SurdValue(3, 1, 6, 2))) == "-√((3+√6)/2)"


small_ints = st.integers(min_value=-30, max_value=30)
radicands = st.sampled_from([0, 2, 3, 5, 6, 7, 10])
denoms = st.integers(min_value=1, max_value=12)


@given(small_ints, small_ints, radicands, denoms)
def test_normalization_idempotent(p, q, s, t):
    v = SurdValue(p, q, s, t)
    assert SurdValue(v.p, v.q, v.s, v.t) == v
    assert v.t > 0 and v.s >= 0
    if v.s:
        assert square_free_split(v.s)[0] == 1


@given(small_ints, small_ints, radicands, denoms,
       small_ints, small_ints, denoms)
def test_same_radicand_field_laws(p1, q1, s, t1, p2, q2, t2):
    a = SurdValue(p1, q1, s, t1)
    b = SurdValue(p2, q2, s, t2)
    assert float(a + b) == pytest.approx(float(a) + float(b), abs=1e-9)
    assert float(a * b) == pytest.approx(float(a) * float(b), abs=1e-9)
    assert float(-a) == -float(a)
    assert float(a.square()) == pytest.approx(float(a) ** 2, abs=1e-9)
    if (b.p, b.q) != (0, 0):
        assert float(a / b) == pytest.approx(float(a) / float(b), abs=1e-9)
