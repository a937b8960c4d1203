"""Hahn and Jacobi polynomials, power sums and the Hankel moment matrix."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import mpmath

from .errors import OrderTooLarge, OutOfSupport, SingularLowerParameter
from .exactnum import MPComplex, as_rational, bernoulli_number, bernoulli_polynomial, pochhammer, to_mpf
from .hypergeom import pfq


def power_sum_direct(k: int, N: int) -> int:
    # 0**0 == 1 in Python, which gives c_0(N) = N
    return sum(i**k for i in range(N))


def power_sum_bernoulli(k: int, N: int) -> Fraction:
    return (bernoulli_polynomial(k + 1, N) - bernoulli_number(k + 1)) / (k + 1)


def power_sum(k: int, N: int) -> Fraction:
    """``sum_{i=0}^{N-1} i**k``, computed by direct summation and by Bernoulli polynomials.

    The two routes are compared on every call; a mismatch raises
    ``ArithmeticError`` since it would mean the Bernoulli convention is off.
    """
    direct = Fraction(power_sum_direct(k, N))
    closed = power_sum_bernoulli(k, N)
    if direct != closed:
        raise ArithmeticError(f"power sum routes disagree at k={k}, N={N}: {direct} vs {closed}")
    return direct


@dataclass(frozen=True)
class HahnParams:
    """Parameters of ``Q_n(y; alpha, beta, M)``; ``M`` may be any rational."""

    alpha: Fraction
    beta: Fraction
    M: Fraction
    n: int

    def __post_init__(self):
        for name in ("alpha", "beta", "M"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))


def hahn_eval(p: HahnParams, y):
    """``3F2(-n, n+alpha+beta+1, -y; alpha+1, -M; 1)`` summed for k = 0..n.

    Polynomial of degree ``n`` in ``y``; defined off the integer support too.
    Raises :class:`SingularLowerParameter` when ``(alpha+1)_k`` or ``(-M)_k``
    vanishes for some ``k <= n``.
    """
    y = as_rational(y)
    return pfq(
        [-p.n, p.n + p.alpha + p.beta + 1, -y],
        [p.alpha + 1, -p.M],
        Fraction(1),
        p.n,
    )


def hahn_weight(x: int, alpha, beta, M: int) -> Fraction:
    if not 0 <= x <= M:
        raise OutOfSupport(f"x={x} outside 0..{M}")
    alpha, beta = as_rational(alpha), as_rational(beta)
    return pochhammer(alpha + 1, x) * pochhammer(beta + 1, M - x) / (factorial(x) * factorial(M - x))


def hahn_norm_ratio(n: int, alpha, beta, M: int) -> Fraction:
    """Leading coefficient over squared norm, ``k_n / h_n``, of the Hahn polynomials.

    Uses ``(-1)^n (2n+a+b+1)/(b+1)_n * (n+a+b+1)_n/(n+a+b+1)_{M+1} * M!/n!``.
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    s = n + alpha + beta + 1
    den1 = pochhammer(beta + 1, n)
    den2 = pochhammer(s, M + 1)
    if den1 == 0:
        raise SingularLowerParameter(n, beta + 1)
    if den2 == 0:
        raise SingularLowerParameter(M + 1, s)
    return (-1) ** n * (2 * n + alpha + beta + 1) / den1 * pochhammer(s, n) / den2 * Fraction(factorial(M), factorial(n))


def hahn_leading_coefficient(n: int, alpha, beta, M) -> Fraction:
    alpha, beta, M = as_rational(alpha), as_rational(beta), as_rational(M)
    return pochhammer(n + alpha + beta + 1, n) / (pochhammer(alpha + 1, n) * pochhammer(-M, n))


def jacobi_coefficients(n: int, a, b) -> list[Fraction]:
    """Coefficients of ``P_n^{(a,b)}`` in powers of ``(x-1)/2``.

    Built as ``C(n,k) (n+a+b+1)_k (a+k+1)_{n-k} / n!``, which never divides by
    a parameter-dependent quantity, so negative integer ``a`` or ``b`` is fine.
    """
    a, b = as_rational(a), as_rational(b)
    nf = factorial(n)
    return [
        comb(n, k) * pochhammer(n + a + b + 1, k) * pochhammer(a + k + 1, n - k) / nf
        for k in range(n + 1)
    ]


def jacobi_eval(n: int, a, b, x):
    coeffs = jacobi_coefficients(n, a, b)
    if isinstance(x, MPComplex):
        with mpmath.workdps(x.digits):
            u = (x.mpc - 1) / 2
            acc = mpmath.mpf(0)
            for c in reversed(coeffs):
                acc = acc * u + to_mpf(c)
            return MPComplex.from_value(acc, x.digits)
    if isinstance(x, (int, Fraction)):
        u = (Fraction(x) - 1) / 2
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * u + c
        return acc
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        u = (x - 1) / 2
        acc = mpmath.mpf(0)
        for c in reversed(coeffs):
            acc = acc * u + to_mpf(c)
        return acc
    u = (complex(x) - 1) / 2
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * u + float(c)
    return acc


def jacobi_recurrence(n: int, a, b, x) -> Fraction:
    """Classical three-term recurrence; only valid for generic (a, b)."""
    a, b, x = as_rational(a), as_rational(b), as_rational(x)
    p_prev, p = Fraction(1), (a - b) / 2 + (a + b + 2) * x / 2
    if n == 0:
        return p_prev
    for k in range(2, n + 1):
        c = 2 * k + a + b
        a1 = 2 * k * (k + a + b) * (c - 2)
        a2 = (c - 1) * (a * a - b * b)
        a3 = (c - 2) * (c - 1) * c
        a4 = 2 * (k + a - 1) * (k + b - 1) * c
        p_prev, p = p, ((a2 + a3 * x) * p - a4 * p_prev) / a1
    return p


def bareiss_determinant(matrix) -> Fraction:
    """Fraction-free Gaussian elimination; exact for integer or rational entries."""
    m = [[as_rational(v) for v in row] for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class HankelMatrix:
    m: int
    N: int
    entries: tuple

    def minor(self, row: int, col: int) -> Fraction:
        """Determinant with ``row`` and ``col`` (0-based) removed."""
        sub = [
            [v for j, v in enumerate(r) if j != col]
            for i, r in enumerate(self.entries)
            if i != row
        ]
        return bareiss_determinant(sub)

    def determinant(self) -> Fraction:
        return bareiss_determinant(self.entries)


def hankel_build(m: int, N: int) -> HankelMatrix:
    if m + 1 > N:
        raise OrderTooLarge(f"order exceeds window: m={m} needs N >= {m + 1}, got N={N}")
    c = [power_sum(k, N) for k in range(2 * m + 1)]
    entries = tuple(tuple(c[i + j] for j in range(m + 1)) for i in range(m + 1))
    return HankelMatrix(m, N, entries)
