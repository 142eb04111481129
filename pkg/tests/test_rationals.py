"""Extended rationals: total order, exact arithmetic, parsing, formatting."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from costgames import NEG_INF, POS_INF, ExtRational, format_rational, parse_rational

rationals = st.fractions(max_denominator=50)
finite = rationals.map(ExtRational)
anything = st.one_of(finite, st.sampled_from([POS_INF, NEG_INF]))


def test_infinities_compare_as_extremes():
    q = ExtRational(Fraction(10**9))
    assert NEG_INF < q < POS_INF
    assert not POS_INF < POS_INF
    assert POS_INF <= POS_INF
    assert POS_INF == ExtRational("+inf")
    assert NEG_INF == ExtRational("-inf")


def test_addition_with_infinity():
    q = ExtRational(Fraction(3, 2))
    assert q + POS_INF == POS_INF
    assert q + NEG_INF == NEG_INF
    with pytest.raises(ArithmeticError):
        POS_INF + NEG_INF


def test_zero_times_infinity_is_zero():
    zero = ExtRational(0)
    assert zero * POS_INF == zero
    assert POS_INF * zero == zero
    assert NEG_INF * zero == zero


def test_sign_flips_infinity():
    assert -POS_INF == NEG_INF
    assert ExtRational(Fraction(-2)) * POS_INF == NEG_INF


def test_is_finite_and_accessor():
    q = ExtRational(Fraction(7, 3))
    assert q.is_finite and q.finite == Fraction(7, 3)
    assert not POS_INF.is_finite
    with pytest.raises(ValueError):
        POS_INF.finite


@settings(deadline=None)
@given(rationals, rationals)
def test_order_matches_fractions(a, b):
    assert (ExtRational(a) < ExtRational(b)) == (a < b)
    assert (ExtRational(a) == ExtRational(b)) == (a == b)


@settings(deadline=None)
@given(rationals, rationals)
def test_arithmetic_matches_fractions(a, b):
    assert (ExtRational(a) + ExtRational(b)).finite == a + b
    assert (ExtRational(a) * ExtRational(b)).finite == a * b


@settings(deadline=None)
@given(anything)
def test_format_parse_round_trip(q):
    text = str(q)
    if q.is_finite:
        assert parse_rational(text) == q.finite
    else:
        assert text in ("+inf", "-inf")


def test_format_rational_plain_and_fraction():
    assert format_rational(Fraction(7)) == "7"
    assert format_rational(Fraction(7, 3)) == "7/3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"


def test_parse_rational_accepts_ints_and_strings():
    assert parse_rational(3) == Fraction(3)
    assert parse_rational("-4/6") == Fraction(-2, 3)
    assert parse_rational("  7 ") == Fraction(7)


def test_parse_rational_rejects_floats_and_bools():
    with pytest.raises(ValueError, match="floats are not accepted"):
        parse_rational(0.5)
    with pytest.raises(ValueError):
        parse_rational(True)
    with pytest.raises(ValueError):
        parse_rational("nonsense")
