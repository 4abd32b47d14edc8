import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from singwell.hermite import (UnsupportedOrderError, hermite_eval,
                              hermite_value, zero_bound, zeros_closed_form,
                              zeros_numeric)

# Independent oracle: explicit expansions of the first few polynomials.
EXPANSIONS = {
    0: [1],
    1: [2, 0],
    2: [4, 0, -2],
    3: [8, 0, -12, 0],
    4: [16, 0, -48, 0, 12],
    5: [32, 0, -160, 0, 120, 0],
    6: [64, 0, -480, 0, 720, 0, -120],
}


def expanded(n, x):
    return sum(c * x ** (len(EXPANSIONS[n]) - 1 - i)
               for i, c in enumerate(EXPANSIONS[n]))


class TestEval:
    def test_origin(self):
        assert hermite_eval(2, 0.0) == (-2.0, 0.0)

    def test_at_table_zero(self):
        value, slope = hermite_eval(2, 0.7071067811865476)
        assert abs(value) < 1e-14
        assert slope == pytest.approx(5.656854249492381, rel=1e-15)

    def test_direct_expansion_quintic(self):
        # H5 = 32x^5 - 160x^3 + 120x: H5(1) = -8, H5'(1) = 160-480+120 = -200
        value, slope = hermite_eval(5, 1.0)
        assert value == pytest.approx(-8.0, rel=1e-14)
        assert slope == pytest.approx(-200.0, rel=1e-14)

    @pytest.mark.parametrize("n", sorted(EXPANSIONS))
    def test_against_expansions(self, n):
        for x in np.linspace(-3.0, 3.0, 13):
            ref = expanded(n, x)
            got = hermite_value(n, float(x))
            assert got == pytest.approx(ref, rel=1e-12, abs=1e-9)

    def test_derivative_against_finite_difference(self):
        for n in (1, 3, 6, 9):
            for x in (-2.2, 0.4, 1.7):
                d = 1e-6
                fd = (hermite_value(n, x + d) - hermite_value(n, x - d)) / (2 * d)
                assert hermite_eval(n, x)[1] == pytest.approx(fd, rel=1e-7)

    def test_invalid_inputs(self):
        with pytest.raises(ValueError):
            hermite_eval(-1, 0.0)
        with pytest.raises(ValueError):
            hermite_eval(2, math.inf)


# Frozen with mpmath (40 digits) from the closed surd forms.
CLOSED_FORM_VALUES = {
    2: [0.70710678118654752, -0.70710678118654752],
    3: [1.2247448713915890, -1.2247448713915890],
    4: [1.6506801238857846, 0.52464762327529032,
        -0.52464762327529032, -1.6506801238857846],
    5: [2.0201828704560856, 0.95857246461381851,
        -0.95857246461381851, -2.0201828704560856],
}


class TestClosedForm:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_values(self, n):
        zs = zeros_closed_form(n)
        assert [z.k for z in zs.zeros] == list(range(1, len(zs.zeros) + 1))
        for zero, ref in zip(zs.zeros, CLOSED_FORM_VALUES[n]):
            assert zero.value == pytest.approx(ref, abs=1e-15)
            assert float(zero.exact) == zero.value

    def test_counts_and_origin_flags(self):
        assert zeros_closed_form(2).count == 2
        assert zeros_closed_form(5).count == 4
        assert not zeros_closed_form(4).origin_zero_present
        assert zeros_closed_form(3).origin_zero_present
        assert zeros_closed_form(5).origin_zero_present

    def test_descending_and_nonzero(self):
        for n in range(2, 6):
            vals = [z.value for z in zeros_closed_form(n).zeros]
            assert all(a > b for a, b in zip(vals, vals[1:]))
            assert all(v != 0 for v in vals)

    def test_zeros_annihilate_polynomial(self):
        for n in range(2, 6):
            for z in zeros_closed_form(n).zeros:
                assert abs(hermite_value(n, z.value)) < 1e-12

    @pytest.mark.parametrize("n", [0, 1, 6, 11])
    def test_out_of_range(self, n):
        with pytest.raises(UnsupportedOrderError):
            zeros_closed_form(n)


class TestNumeric:
    def test_empty_orders(self):
        assert zeros_numeric(0).zeros == ()
        assert not zeros_numeric(0).origin_zero_present
        assert zeros_numeric(1).zeros == ()
        assert zeros_numeric(1).origin_zero_present

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_agrees_with_closed_form(self, n):
        closed = zeros_closed_form(n)
        numeric = zeros_numeric(n)
        assert closed.count == numeric.count
        for zc, zn in zip(closed.zeros, numeric.zeros):
            assert zn.value == pytest.approx(zc.value, abs=1e-12)

    @pytest.mark.parametrize("n", [6, 7, 10])
    def test_against_companion_matrix_roots(self, n):
        # numpy's hermroots uses an independent eigenvalue method
        coeffs = [0.0] * n + [1.0]
        ref = sorted((r for r in np.polynomial.hermite.hermroots(coeffs)
                      if abs(r) > 1e-10), reverse=True)
        got = [z.value for z in zeros_numeric(n).zeros]
        assert len(got) == len(ref)
        np.testing.assert_allclose(got, ref, atol=1e-12)

    def test_residuals_tiny(self):
        for n in (6, 9, 14):
            for z in zeros_numeric(n).zeros:
                value, slope = hermite_eval(n, z.value)
                assert abs(value) <= 1e-13 * abs(slope) * max(1.0, abs(z.value))

    def test_zero_bound(self):
        for n in range(2, 15):
            bound = zero_bound(n)
            for z in zeros_numeric(n).zeros:
                assert abs(z.value) < bound
                assert z.value ** 2 < 2 * n + 1   # beta denominator stays positive

    def test_interlacing(self):
        for n in range(2, 9):
            outer = [z.value for z in zeros_numeric(n + 1).zeros]
            inner = zeros_numeric(n).all_zero_values()
            outer_all = zeros_numeric(n + 1).all_zero_values()
            for hi, lo in zip(outer_all, outer_all[1:]):
                assert sum(1 for z in inner if lo < z < hi) == 1
            assert len(outer) == n + 1 - (1 if (n + 1) % 2 else 0)


@given(st.integers(min_value=1, max_value=11),
       st.floats(min_value=-5.0, max_value=5.0, allow_nan=False))
def test_recurrence_consistency(n, x):
    up = hermite_value(n + 1, x)
    mid = hermite_value(n, x)
    down = hermite_value(n - 1, x)
    assert abs(up - (2 * x * mid - 2 * n * down)) < 1e-9 * max(1.0, abs(up))


@given(st.integers(min_value=0, max_value=12),
       st.floats(min_value=-5.0, max_value=5.0, allow_nan=False))
def test_parity(n, x):
    direct = hermite_value(n, -x)
    mirrored = (-1.0) ** n * hermite_value(n, x)
    assert direct == pytest.approx(mirrored, rel=1e-12, abs=1e-12)
