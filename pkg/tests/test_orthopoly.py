from fractions import Fraction
from math import factorial

import mpmath
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hahnfir.errors import OrderTooLarge, OutOfSupport
from hahnfir.exactnum import MPComplex
from hahnfir.orthopoly import (
    HahnParams,
    bareiss_determinant,
    hahn_eval,
    hahn_leading_coefficient,
    hahn_norm_ratio,
    hahn_weight,
    hankel_build,
    jacobi_eval,
    jacobi_recurrence,
)

X = sympy.Symbol("x")


def sym(q):
    q = Fraction(q)
    return sympy.Rational(q.numerator, q.denominator)


def hahn_symbolic(n, alpha, beta, M):
    """Q_n as a sympy polynomial in x, built from the raw hypergeometric sum."""
    a, b, M = sym(alpha), sym(beta), sym(M)
    terms = [
        sympy.rf(-n, k) * sympy.rf(n + a + b + 1, k) * sympy.rf(-X, k)
        / (sympy.rf(a + 1, k) * sympy.rf(-M, k) * sympy.factorial(k))
        for k in range(n + 1)
    ]
    return sympy.Poly(sympy.expand(sum(terms)), X)


def test_hahn_degree_zero_and_origin():
    assert hahn_eval(HahnParams(Fraction(1, 3), 2, 7, 0), Fraction(11, 5)) == 1
    assert hahn_eval(HahnParams(Fraction(1, 3), 2, 7, 4), 0) == 1


def test_hahn_example():
    assert hahn_eval(HahnParams(1, 0, -5, 1), -1) == Fraction(7, 10)


@pytest.mark.parametrize("n, alpha, beta, M", [(2, 0, 0, 6), (3, Fraction(1, 2), 2, 9), (4, 3, Fraction(-1, 3), 10)])
def test_hahn_matches_symbolic_expansion(n, alpha, beta, M):
    poly = hahn_symbolic(n, alpha, beta, M)
    for y in (-3, 0, Fraction(5, 2), 4, 11):
        assert hahn_eval(HahnParams(alpha, beta, M, n), y) == Fraction(str(poly.eval(sym(y))))


@pytest.mark.parametrize("x, alpha, beta, M, expected", [
    (0, 2, Fraction(1, 2), 3, Fraction(35, 16)),  # (3/2)_3 / 3!
    (2, 0, 0, 4, 1),
    (1, 1, 0, 3, 2),
])
def test_hahn_weight_examples(x, alpha, beta, M, expected):
    assert hahn_weight(x, alpha, beta, M) == expected


def test_hahn_weight_out_of_support():
    with pytest.raises(OutOfSupport):
        hahn_weight(5, 0, 0, 4)


@pytest.mark.parametrize("alpha, expected", [(0, Fraction(1, 5)), (1, Fraction(1, 15))])
def test_norm_ratio_examples(alpha, expected):
    assert hahn_norm_ratio(0, alpha, 0, 4) == expected


@pytest.mark.parametrize("alpha", [0, 1, Fraction(5, 2), 4])
@pytest.mark.parametrize("M", [2, 5, 9])
def test_norm_ratio_at_degree_zero(alpha, M):
    assert hahn_norm_ratio(0, alpha, 0, M) == factorial(M) / sympy_poch(alpha + 2, M)


def sympy_poch(a, k):
    return Fraction(str(sympy.rf(sym(a), k)))


@pytest.mark.parametrize("n, alpha, beta, M", [(1, 0, 0, 5), (2, 1, 0, 6), (3, Fraction(1, 2), 2, 7), (2, 3, 1, 4)])
def test_norm_ratio_against_brute_force(n, alpha, beta, M):
    poly = hahn_symbolic(n, alpha, beta, M)
    lead = Fraction(str(poly.LC()))
    norm = sum(
        hahn_weight(x, alpha, beta, M) * Fraction(str(poly.eval(x))) ** 2 for x in range(M + 1)
    )
    assert lead == hahn_leading_coefficient(n, alpha, beta, M)
    assert hahn_norm_ratio(n, alpha, beta, M) == lead / norm


@pytest.mark.parametrize("M", range(1, 11))
def test_hahn_orthogonality(M):
    alpha, beta = Fraction(1, 2), Fraction(2)
    for m in range(M + 1):
        for n in range(m):
            total = sum(
                hahn_weight(x, alpha, beta, M)
                * hahn_eval(HahnParams(alpha, beta, M, m), x)
                * hahn_eval(HahnParams(alpha, beta, M, n), x)
                for x in range(M + 1)
            )
            assert total == 0


params = st.fractions(min_value=-3, max_value=6, max_denominator=4)


@given(params, params, st.fractions(min_value=-3, max_value=3, max_denominator=7))
def test_jacobi_degree_one(a, b, x):
    assert jacobi_eval(1, a, b, x) == (a + b + 2) * (x - 1) / 2 + (a + 1)


def test_jacobi_trivial_values():
    assert jacobi_eval(0, 3, 4, Fraction(1, 9)) == 1
    assert jacobi_eval(2, 0, 0, 1) == 1


@pytest.mark.parametrize("n", range(6))
def test_jacobi_matches_sympy(n):
    a, b = Fraction(3, 2), Fraction(-1, 3)
    for x in (Fraction(-7, 2), 0, Fraction(1, 3), 2):
        ref = sympy.jacobi_poly(n, sym(a), sym(b), sym(x))
        assert jacobi_eval(n, a, b, x) == Fraction(str(ref))


@given(st.integers(0, 7), params, params, st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_jacobi_matches_recurrence(n, a, b, x):
    try:
        ref = jacobi_recurrence(n, a, b, x)
    except ZeroDivisionError:
        return
    assert jacobi_eval(n, a, b, x) == ref


def test_jacobi_negative_integer_parameters():
    # P_2^{(-5, -1)}: generic recurrence divides by zero here, the explicit sum does not
    assert jacobi_eval(2, -5, -1, 3) == Fraction(str(sympy.expand(
        sympy.jacobi(2, sympy.Symbol("a"), sympy.Symbol("b"), 3).subs({"a": -5, "b": -1}))))


def test_jacobi_multiprecision():
    z = MPComplex.from_value(mpmath.mpc("0.3", "-0.8"), 40)
    got = jacobi_eval(5, 2, -3, z)
    with mpmath.workdps(40):
        ref = mpmath.jacobi(5, 2, -3, z.mpc)
        assert abs(got.mpc - ref) < mpmath.mpf(10) ** -35


@pytest.mark.parametrize("m, N, expected", [
    (0, 7, ((7,),)),
    (1, 4, ((4, 6), (6, 14))),
    (1, 3, ((3, 3), (3, 5))),
])
def test_hankel_examples(m, N, expected):
    assert hankel_build(m, N).entries == expected


@pytest.mark.parametrize("N", range(1, 17))
def test_hankel_nonsingular(N):
    for m in range(N):
        assert hankel_build(m, N).determinant() != 0


def test_hankel_order_too_large():
    with pytest.raises(OrderTooLarge, match="order exceeds window"):
        hankel_build(4, 4)


matrices = st.integers(1, 5).flatmap(
    lambda k: st.lists(st.lists(st.integers(-9, 9), min_size=k, max_size=k), min_size=k, max_size=k)
)


@given(matrices)
def test_bareiss_matches_sympy(rows):
    assert bareiss_determinant(rows) == int(sympy.Matrix(rows).det())
