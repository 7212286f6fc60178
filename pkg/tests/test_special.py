"""Named number and polynomial families against their defining products,
recurrences and convolution laws."""

from __future__ import annotations

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from umbral import (
    CoeffTriangle,
    InvalidParameterError,
    Polynomial,
    Series,
    abel_triangle,
    bernoulli_high,
    bernoulli_series,
    compositions,
    euler_high,
    euler_series,
    falling_factorial,
    lah,
    lah_triangle,
    mittag_leffler_triangle,
    multinomial,
    rising_factorial,
    stirling1_signed,
    stirling1_triangle,
    stirling1_unsigned,
)

from oracles import classical_bernoulli, conv_inverse, poly_product


# -- Stirling numbers of the first kind ----------------------------------------


def test_signed_values_from_direct_expansion():
    # x(x-1) = x^2 - x
    assert poly_product([0, 1], [-1, 1]) == [0, -1, 1]
    assert stirling1_signed(2, 1) == -1
    assert stirling1_signed(2, 2) == 1


def test_unsigned_values_from_direct_expansion():
    # x(x+1)(x+2) = x^3 + 3x^2 + 2x
    assert poly_product(poly_product([0, 1], [1, 1]), [2, 1]) == [0, 2, 3, 1]
    assert stirling1_unsigned(3, 1) == 2
    assert stirling1_unsigned(3, 2) == 3
    assert stirling1_unsigned(3, 3) == 1


def test_diagonal_is_one():
    for n in range(7):
        assert stirling1_signed(n, n) == 1
        assert stirling1_unsigned(n, n) == 1


def test_out_of_triangle_indices_are_zero():
    assert stirling1_signed(3, 5) == 0
    assert stirling1_signed(-1, 0) == 0
    assert stirling1_unsigned(2, -1) == 0


@pytest.mark.parametrize("n", range(16))
def test_signed_triangle_matches_falling_factorial(n):
    expected = falling_factorial(n)
    assert Polynomial([stirling1_signed(n, k) for k in range(n + 1)]) == expected


@pytest.mark.parametrize("n", range(16))
def test_unsigned_triangle_matches_rising_factorial(n):
    expected = rising_factorial(n)
    assert Polynomial([stirling1_unsigned(n, k) for k in range(n + 1)]) == expected


def test_stirling_triangle_rows():
    tri = stirling1_triangle(3)
    assert tri.rows[3] == (0, 2, 3, 1)
    signed = stirling1_triangle(3, signed=True)
    assert signed.rows[3] == (0, 2, -3, 1)


# -- factorial polynomials ---------------------------------------------------------


def test_factorials_at_zero_and_small_orders():
    assert falling_factorial(0) == Polynomial([1])
    assert rising_factorial(0) == Polynomial([1])
    assert falling_factorial(2) == Polynomial([0, -1, 1])
    assert rising_factorial(3) == Polynomial([0, 2, 3, 1])


# -- Lah numbers ---------------------------------------------------------------------


def test_lah_edge_rows():
    assert lah(0, 0) == 1
    for n in range(1, 6):
        assert lah(n, 0) == 0


def test_lah_closed_form_values():
    # C(2, 0) * 3!/1! = 6, C(2, 1) * 3!/2! = 6, C(2, 2) * 3!/3! = 1
    assert lah(3, 1) == 6
    assert lah(3, 2) == 6
    assert lah(3, 3) == 1


def test_lah_above_diagonal():
    assert lah(2, 3) == 0


def test_lah_triangles():
    unsigned = lah_triangle(3)
    signed = lah_triangle(3, signed=True)
    assert unsigned.rows[3] == (0, 6, 6, 1)
    assert signed.rows[3] == (0, -6, 6, -1)
    assert signed.rows[0] == (1,)


# -- higher-order Bernoulli numbers -----------------------------------------------------


def test_order_zero_is_the_unit_series():
    assert bernoulli_high(0, 0) == 1
    for n in range(1, 6):
        assert bernoulli_high(n, 0) == 0


def test_order_one_matches_classical_recurrence():
    expected = classical_bernoulli(8)
    for n in range(9):
        assert bernoulli_high(n, 1) == expected[n]


def test_second_order_value_from_convolution():
    # B_1 of order 2 via sum_j C(1,j) B_j B_{1-j} with order-1 values
    b = classical_bernoulli(1)
    expected = math.comb(1, 0) * b[0] * b[1] + math.comb(1, 1) * b[1] * b[0]
    assert expected == -1
    assert bernoulli_high(1, 2) == -1


def test_negative_order_one_gives_harmonic_like_values():
    for n in range(13):
        assert bernoulli_high(n, -1) == F(1, n + 1)


def test_integer_order_agrees_with_repeated_products():
    base = Series([F(1, math.factorial(k + 1)) for k in range(8)]).inv()
    for alpha in (2, 3, -2):
        powered = base.int_pow(alpha)
        for n in range(8):
            assert bernoulli_high(n, alpha) == powered.egf_coefficient(n)


ORDER_POOL = [F(1), F(-1), F(2), F(1, 2), F(-1, 2), F(3), F(-5, 3), F(0)]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(ORDER_POOL), st.sampled_from(ORDER_POOL), st.integers(0, 12))
def test_bernoulli_convolution_law(alpha, beta, n):
    total = sum(
        math.comb(n, j) * bernoulli_high(j, alpha) * bernoulli_high(n - j, beta)
        for j in range(n + 1)
    )
    assert bernoulli_high(n, alpha + beta) == total


# -- higher-order Euler numbers ------------------------------------------------------------


def test_euler_order_zero_and_constant_term():
    assert euler_high(0, 0) == 1
    for n in range(1, 5):
        assert euler_high(n, 0) == 0
    for alpha in (F(1), F(-3), F(1, 2)):
        assert euler_high(0, alpha) == 1


def test_first_euler_number_from_inversion_oracle():
    base = [F(1)] + [F(1, 2 * math.factorial(k)) for k in range(1, 4)]
    inverted = conv_inverse(base, 4)
    assert inverted[1] == F(-1, 2)
    assert euler_high(1, 1) == F(-1, 2)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(ORDER_POOL), st.sampled_from(ORDER_POOL), st.integers(0, 12))
def test_euler_convolution_law(alpha, beta, n):
    total = sum(
        math.comb(n, j) * euler_high(j, alpha) * euler_high(n - j, beta)
        for j in range(n + 1)
    )
    assert euler_high(n, alpha + beta) == total


def test_series_builders_match_number_accessors():
    assert bernoulli_series(F(1, 2), 6).egf_coefficient(3) == bernoulli_high(3, F(1, 2))
    assert euler_series(F(-2), 6).egf_coefficient(4) == euler_high(4, -2)


# -- Abel triangle ------------------------------------------------------------------------------


def test_abel_rows_from_closed_form():
    tri = abel_triangle(3, 1)
    assert tri.rows[0] == (1,)
    assert tri.rows[1] == (0, 1)
    assert tri.rows[2] == (0, -2, 1)           # x(x-2)
    assert tri.rows[3] == (0, 9, -6, 1)        # x(x-3)^2


def test_abel_rational_parameter():
    tri = abel_triangle(2, F(1, 2))
    assert tri.rows[2] == (0, -1, 1)           # x(x-1)


def test_abel_structure_invariants():
    tri = abel_triangle(8, F(-2, 3))
    for n in range(1, 9):
        assert tri.entry(n, n) == 1
        assert tri.entry(n, 0) == 0


def test_abel_rejects_zero_parameter():
    with pytest.raises(InvalidParameterError):
        abel_triangle(3, 0)


# -- Mittag-Leffler triangle ----------------------------------------------------------------------


def test_mittag_leffler_small_rows():
    tri = mittag_leffler_triangle(2)
    assert tri.rows[0] == (1,)
    assert tri.rows[1] == (0, 2)
    assert tri.rows[2] == (0, 0, 4)


def test_mittag_leffler_structure_invariants():
    tri = mittag_leffler_triangle(9)
    for n in range(1, 10):
        assert tri.entry(n, 0) == 0
        assert tri.entry(n, n) == F(2) ** n


# -- multinomials and compositions ---------------------------------------------------------------


def test_multinomial_values():
    assert multinomial(1, [1, 0]) == 1
    assert multinomial(4, [2, 1, 1]) == 12
    for n in range(5):
        assert multinomial(n, [n]) == 1


def test_multinomial_validation():
    with pytest.raises(InvalidParameterError):
        multinomial(3, [1, 1])
    with pytest.raises(InvalidParameterError):
        multinomial(2, [3, -1])


def test_compositions_exhaustive_listings():
    assert list(compositions(0, 3)) == [(0, 0, 0)]
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(compositions(0, 0)) == [()]


def test_compositions_count_is_stars_and_bars():
    listed = list(compositions(5, 3))
    assert len(listed) == math.comb(7, 2) == 21
    assert len(set(listed)) == 21
    assert all(sum(c) == 5 for c in listed)
    assert listed == sorted(listed)


def test_compositions_validation():
    with pytest.raises(InvalidParameterError):
        compositions(2, 0)
    with pytest.raises(InvalidParameterError):
        compositions(-1, 2)


# -- triangle container ------------------------------------------------------------------------


def test_triangle_shape_validation():
    with pytest.raises(Exception):
        CoeffTriangle([[1], [0, 1, 0]])


def test_triangle_csv_lines():
    lines = list(lah_triangle(2).csv_lines())
    assert lines[0] == "n,k,value"
    assert "2,1,2" in lines
