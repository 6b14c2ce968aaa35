from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from urkit.biglog import ADD_GAP, BigLogNumber

B = BigLogNumber
positive = st.builds(B, st.fractions(min_value=Fraction(1, 10**6), max_value=10**6), st.integers(-500, 500))


def test_normalisation():
    x = B(1836, 20)
    assert x.mantissa == Fraction(1836, 1000) and x.exponent == 23
    assert B(0, 99).exponent == 0


def test_float_goes_through_repr():
    assert B.of(0.1) == B(Fraction(1, 10))


def test_negative_rejected():
    with pytest.raises(ValueError):
        B(-1)


@given(positive, positive)
def test_mul_div_round_trip(x, y):
    assert (x * y) / y == x


@given(positive, st.integers(-5, 5))
def test_power(x, n):
    assert x**n * x ** (-n) == B(1)


@given(positive)
def test_sqrt_of_square(x):
    assert (x**2).sqrt() == x


def test_inexact_sqrt_has_error_bound():
    r = B(2).sqrt()
    assert not r.is_exact
    assert abs(float(r) - 2**0.5) < 1e-15


def test_exact_addition():
    assert B(1, 3) + B(5, 2) == B(1500)


def test_addition_beyond_gap_keeps_dominant_term():
    s = B(1, 100) + B(1, 100 - ADD_GAP - 5)
    assert s == B(1, 100)
    assert 0 < s.rel_error <= Fraction(1, 10**ADD_GAP)


def test_subtraction():
    assert B(5, 2) - B(1, 2) == B(4, 2)
    with pytest.raises(ValueError):
        B(1) - B(2)


@given(st.integers(-300, 300))
def test_order_of_magnitude_of_powers(e):
    assert B.power_of_ten(e).order_of_magnitude() == e


def test_order_of_magnitude_rounding():
    assert B(3, 10).order_of_magnitude() == 10
    assert B(4, 10).order_of_magnitude() == 11  # log10(4) > 0.5
    assert B(Fraction(316, 100), 0).order_of_magnitude() == 0
    assert B(Fraction(317, 100), 0).order_of_magnitude() == 1


def test_pi_factor():
    x = B(4, 0, 1)
    assert x.sci() == "pi*4e0"
    assert abs(float(x) - 12.566370614359172) < 1e-12
    with pytest.raises(ValueError):
        x.to_fraction()
    assert (x * x).sqrt() == x


def test_sci_format():
    assert B.power_of_ten(120).sci() == "1e120"
    assert B(1836, 20).sci() == "1.836e23"


def test_ordering():
    assert B(1, 5) < B(2, 5) < B(1, 6)
    assert B(1, 0, 1) < B(4)
