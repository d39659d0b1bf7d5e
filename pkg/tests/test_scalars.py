"""Tests for scalar realizations and the exact radical type"""

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropical.scalars import (
    Arithmetic, Surd, close, exact_root, format_scalar, inverse, make_surd, nth_root,
    parse_scalar, to_scalar,
)

positive_fractions = st.fractions(min_value=F(1, 50), max_value=50).filter(lambda x: x > 0)


def test_exact_root_of_perfect_power():
    """Test that perfect powers have rational roots"""
    assert exact_root(F(27, 8), 3) == F(3, 2)
    assert exact_root(F(16), 4) == 2
    assert exact_root(F(2), 2) is None


def test_nth_root_stays_rational_when_possible():
    """Test that nth_root returns a Fraction for perfect powers and a Surd otherwise"""
    assert nth_root(F(8), 3) == 2
    assert isinstance(nth_root(F(8), 3), F)
    assert isinstance(nth_root(F(2), 2), Surd)
    assert nth_root(F(5), 1) == 5
    assert nth_root(F(0), 4) == 0


def test_nth_root_float_mode():
    """Test that float input gives a float root"""
    assert nth_root(8.0, 3) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        nth_root(F(2), 0)


def test_surd_squares_back_to_rational():
    """Test that multiplying radicals collapses to a Fraction"""
    root2 = nth_root(F(2), 2)
    product = root2 * root2
    assert isinstance(product, F)
    assert product == 2
    assert root2 ** 2 == 2


def test_surd_inverse_and_division():
    """Test that x * x^-1 is exactly 1 for a radical"""
    r = nth_root(F(3, 2), 3)
    assert r * r.inverse() == 1
    assert inverse(r) * r == 1
    assert F(1) / r == r.inverse()
    assert str(nth_root(F(2), 2).inverse()) == "1/2*2^(1/2)"


def test_surd_ordering_against_rationals():
    """Test exact ordering of radicals and fractions"""
    root2 = nth_root(F(2), 2)
    assert F(7, 5) < root2 < F(3, 2)
    assert root2 > 1
    assert not (root2 > F(3, 2))
    assert max([F(7, 5), root2, F(1)]) is root2


def test_surd_equality_across_representations():
    """Test that 8^(1/6) and 2^(1/2) compare equal exactly"""
    assert nth_root(F(8), 6) == nth_root(F(2), 2)
    assert close(nth_root(F(8), 6), nth_root(F(2), 2))


def test_surd_near_tie_is_resolved_exactly():
    """Test that values closer than the float fast path are still ordered"""
    a = make_surd(F(1), ((F(2), F(1, 2)),))
    tiny = F(1, 10 ** 15)
    b = a * (1 + tiny)
    assert b > a
    assert a < b
    assert a != b


def test_surd_rendering():
    """Test the string form used in reports"""
    assert format_scalar(nth_root(F(3, 2), 3)) == "(3/2)^(1/3)"
    assert format_scalar(nth_root(F(12), 2)) == "12^(1/2)"
    assert float(nth_root(F(2), 2)) == pytest.approx(2 ** 0.5)


def test_make_surd_collapses_integer_exponents():
    """Test normalization of whole exponents into the coefficient"""
    assert make_surd(F(1), ((F(3), F(2)),)) == 9
    assert make_surd(F(2), ((F(4), F(1, 2)),)) == 4


@given(positive_fractions, st.integers(min_value=1, max_value=6))
def test_root_power_round_trip(x, k):
    """Test that (x^(1/k))^k = x exactly"""
    assert nth_root(x, k) ** k == x


@given(positive_fractions, positive_fractions, st.integers(min_value=2, max_value=5))
def test_root_is_monotone(x, y, k):
    """Test that k-th roots preserve order exactly"""
    rx, ry = nth_root(x, k), nth_root(y, k)
    assert (rx < ry) == (x < y)
    assert (rx == ry) == (x == y)


def test_parse_scalar_formats():
    """Test integers, decimals and fractions"""
    assert parse_scalar("2") == 2
    assert parse_scalar("0.5") == F(1, 2)
    assert parse_scalar(" 1/3 ") == F(1, 3)
    assert parse_scalar("1/4", Arithmetic.FLOAT) == 0.25
    assert isinstance(parse_scalar("1/4", Arithmetic.FLOAT), float)


@pytest.mark.parametrize("token", ["", "abc", "1/0", "1//2"])
def test_parse_scalar_rejects_garbage(token):
    """Test that unreadable tokens raise ValueError"""
    with pytest.raises(ValueError):
        parse_scalar(token)


def test_to_scalar_and_inverse():
    """Test conversions between realizations and the 0 -> 0 inverse"""
    assert to_scalar(0.5) == F(1, 2)
    assert to_scalar(F(1, 3), Arithmetic.FLOAT) == pytest.approx(1 / 3)
    assert inverse(F(0)) == 0
    assert inverse(0.0) == 0.0
    assert inverse(F(4)) == F(1, 4)
    assert inverse(4.0) == 0.25


def test_close_uses_relative_tolerance_for_floats():
    """Test float tolerance and exact rational equality"""
    assert close(0.1 + 0.2, 0.3)
    assert not close(1.0, 1.0 + 1e-6)
    assert close(F(1, 3), F(2, 6))
    assert not close(F(1, 3), F(333333333, 10 ** 9))
