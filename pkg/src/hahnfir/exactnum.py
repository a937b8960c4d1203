"""Exact rational helpers and a precision-tagged complex type.

Everything coefficient-related in the package is computed with
:class:`fractions.Fraction`; floating values only appear at the last step
(transfer-function evaluation), where :class:`MPComplex` carries an explicit
decimal precision.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Union

import mpmath

Rational = Fraction
RationalLike = Union[int, Fraction]

DEFAULT_DIGITS = 64


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


def pochhammer(a: RationalLike, k: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+k-1)``; 1 for ``k == 0``.

    Negative integer ``a`` is handled as the literal finite product, so the
    result is 0 once the product passes through zero.
    """
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    a = as_rational(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
        if out == 0:
            return out
    return out


def pochhammer_ratio_shift(a: RationalLike, j: int, k: int) -> Fraction:
    """``(a)_{j+k} / (a)_j``, i.e. ``(a+j)_k``, without any division."""
    return pochhammer(as_rational(a) + j, k)


def gamma_ratio(numerator_args, denominator_args) -> Fraction:
    """Exact ``prod Gamma(p) / prod Gamma(q)`` for integer arguments.

    ``1/Gamma(q)`` is taken as 0 at the poles ``q <= 0``; a pole in the
    numerator is an error.
    """
    out = Fraction(1)
    for p in numerator_args:
        if int(p) != p or p <= 0:
            raise ValueError(f"Gamma({p}) is not a finite integer-argument value")
        out *= factorial(int(p) - 1)
    for q in denominator_args:
        if int(q) != q:
            raise ValueError(f"Gamma({q}) needs an integer argument here")
        if q <= 0:
            return Fraction(0)
        out /= factorial(int(q) - 1)
    return out


@lru_cache(maxsize=None)
def bernoulli_number(k: int) -> Fraction:
    """Bernoulli number with ``B_1 = -1/2``.

    Uses the recurrence ``sum_{j=0}^{k} C(k+1, j) B_j = 0``; this is the
    convention for which ``(B_{k+1}(N) - B_{k+1}) / (k+1)`` is the power sum
    ``0^k + ... + (N-1)^k``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Fraction(1)
    acc = sum((comb(k + 1, j) * bernoulli_number(j) for j in range(k)), Fraction(0))
    return -acc / (k + 1)


def bernoulli_polynomial(k: int, x: RationalLike) -> Fraction:
    x = as_rational(x)
    return sum(
        (comb(k, j) * bernoulli_number(j) * x ** (k - j) for j in range(k + 1)),
        Fraction(0),
    )


def format_rational(q: RationalLike) -> str:
    q = as_rational(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class PrecisionMixWarning(UserWarning):
    """Two MPComplex values with different precisions were combined."""


@dataclass(frozen=True)
class MPComplex:
    """Complex value tagged with the number of decimal digits it was computed at.

    Binary operations run at the smaller of the two precisions; the result
    carries ``mixed=True`` and a :class:`PrecisionMixWarning` is emitted when
    the operands disagree.
    """

    re: mpmath.mpf
    im: mpmath.mpf
    digits: int = DEFAULT_DIGITS
    mixed: bool = field(default=False, compare=False)

    @classmethod
    def from_value(cls, value, digits: int = DEFAULT_DIGITS) -> "MPComplex":
        if isinstance(value, MPComplex):
            value = value.mpc
        with mpmath.workdps(digits):
            if isinstance(value, Fraction):
                z = mpmath.mpc(mpmath.mpf(value.numerator) / value.denominator)
            else:
                z = mpmath.mpc(value)
            return cls(+z.real, +z.imag, digits)

    @classmethod
    def expj(cls, theta, digits: int = DEFAULT_DIGITS) -> "MPComplex":
        with mpmath.workdps(digits):
            z = mpmath.expj(mpmath.mpf(theta))
            return cls(z.real, z.imag, digits)

    @property
    def mpc(self) -> mpmath.mpc:
        # mpc() rounds to the active context, which may be coarser than ours
        with mpmath.workdps(max(self.digits, mpmath.mp.dps)):
            return mpmath.mpc(self.re, self.im)

    def _combine(self, other, op) -> "MPComplex":
        if isinstance(other, MPComplex):
            digits = min(self.digits, other.digits)
            mixed = self.mixed or other.mixed or self.digits != other.digits
            if self.digits != other.digits:
                warnings.warn(
                    f"combining {self.digits}- and {other.digits}-digit values",
                    PrecisionMixWarning,
                    stacklevel=3,
                )
            rhs = other.mpc
        else:
            digits, mixed = self.digits, self.mixed
            rhs = other
        with mpmath.workdps(digits):
            if isinstance(rhs, Fraction):
                rhs = mpmath.mpf(rhs.numerator) / rhs.denominator
            z = mpmath.mpc(op(self.mpc, rhs))
            return MPComplex(z.real, z.imag, digits, mixed)

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._combine(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._combine(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._combine(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._combine(other, lambda a, b: b / a)

    def __neg__(self):
        with mpmath.workdps(self.digits):
            return MPComplex(-self.re, -self.im, self.digits, self.mixed)

    def __abs__(self):
        with mpmath.workdps(self.digits):
            return abs(self.mpc)

    def conjugate(self) -> "MPComplex":
        with mpmath.workdps(self.digits):
            return MPComplex(self.re, -self.im, self.digits, self.mixed)

    def arg(self):
        with mpmath.workdps(self.digits):
            return mpmath.arg(self.mpc)

    def __complex__(self):
        return complex(self.mpc)

    def to_json(self) -> dict:
        return {
            "re": mpmath.nstr(self.re, self.digits),
            "im": mpmath.nstr(self.im, self.digits),
            "digits": self.digits,
        }

    @classmethod
    def from_json(cls, data: dict) -> "MPComplex":
        digits = int(data["digits"])
        with mpmath.workdps(digits):
            return cls(mpmath.mpf(data["re"]), mpmath.mpf(data["im"]), digits)


def to_mpf(q: RationalLike):
    """Round an exact rational into the current mpmath context."""
    q = as_rational(q)
    return mpmath.mpf(q.numerator) / q.denominator


def relative_error(approx, exact) -> "mpmath.mpf":
    """``|approx - exact| / |exact|`` (absolute error when ``exact`` is 0)."""
    a = approx.mpc if isinstance(approx, MPComplex) else approx
    b = exact.mpc if isinstance(exact, MPComplex) else exact
    den = abs(b)
    num = abs(a - b)
    return num / den if den != 0 else num
