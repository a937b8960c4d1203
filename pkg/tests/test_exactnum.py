import warnings
from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hahnfir.exactnum import (
    MPComplex,
    PrecisionMixWarning,
    bernoulli_number,
    bernoulli_polynomial,
    format_rational,
    gamma_ratio,
    parse_rational,
    pochhammer,
)
from hahnfir.orthopoly import power_sum, power_sum_bernoulli, power_sum_direct

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@pytest.mark.parametrize("a, k, expected", [(3, 4, 360), (Fraction(7, 3), 0, 1), (-2, 3, 0), (-3, 3, -6)])
def test_pochhammer_examples(a, k, expected):
    assert pochhammer(a, k) == expected


@given(rationals, st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_splits(a, j, k):
    assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)


@given(rationals, st.integers(0, 7))
def test_pochhammer_matches_sympy(a, k):
    assert pochhammer(a, k) == Fraction(str(sympy.rf(sympy.Rational(a.numerator, a.denominator), k)))


def test_pochhammer_rejects_negative_length():
    with pytest.raises(ValueError):
        pochhammer(1, -1)


def test_bernoulli_numbers():
    assert [bernoulli_number(k) for k in range(7)] == [
        1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42)
    ]


@pytest.mark.parametrize("k", range(2, 16))
def test_bernoulli_numbers_agree_with_sympy_beyond_one(k):
    # sympy uses B_1 = +1/2; every other index agrees
    assert bernoulli_number(k) == Fraction(str(sympy.bernoulli(k)))


def test_bernoulli_polynomial():
    assert bernoulli_polynomial(0, Fraction(9, 4)) == 1
    assert bernoulli_polynomial(3, 5) == 90
    for k in range(8):
        assert bernoulli_polynomial(k, 0) == bernoulli_number(k)


@pytest.mark.parametrize("k, N, expected", [(0, 5, 5), (1, 4, 6), (2, 5, 30)])
def test_power_sum_examples(k, N, expected):
    assert power_sum(k, N) == expected


def test_power_sum_routes_agree():
    for k in range(13):
        for N in range(1, 31):
            assert power_sum_bernoulli(k, N) == power_sum_direct(k, N)


def test_gamma_ratio():
    assert gamma_ratio([5], [3]) == 12
    assert gamma_ratio([4, 4], [7]) == Fraction(36, 720)
    assert gamma_ratio([3], [0]) == 0
    with pytest.raises(ValueError):
        gamma_ratio([0], [1])


@given(rationals)
def test_rational_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_format_rational_always_has_denominator():
    assert format_rational(3) == "3/1"
    assert format_rational(Fraction(-2, 6)) == "-1/3"


def test_mpcomplex_tracks_precision():
    a = MPComplex.from_value(Fraction(1, 3), 30)
    b = MPComplex.from_value(Fraction(1, 3), 30)
    c = a + b
    assert c.digits == 30 and not c.mixed
    with mpmath.workdps(30):
        assert abs(c.mpc - mpmath.mpf(2) / 3) < mpmath.mpf(10) ** -29


def test_mixing_precisions_warns_and_downgrades():
    a = MPComplex.from_value(Fraction(1, 7), 50)
    b = MPComplex.from_value(Fraction(1, 7), 20)
    with pytest.warns(PrecisionMixWarning):
        c = a * b
    assert c.digits == 20 and c.mixed


def test_same_precision_is_silent():
    a = MPComplex.expj(0.3, 25)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        _ = a * a.conjugate()


def test_unit_circle_point():
    z = MPComplex.expj(1.0, 40)
    with mpmath.workdps(40):
        assert abs(abs(z) - 1) < mpmath.mpf(10) ** -38


def test_json_round_trip():
    z = MPComplex.expj(0.7, 33)
    back = MPComplex.from_json(z.to_json())
    assert back.digits == 33
    with mpmath.workdps(33):
        assert abs(back.mpc - z.mpc) < mpmath.mpf(10) ** -31
