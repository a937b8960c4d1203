"""Orthogonal-difference filters built on Hahn polynomials.

At order zero the orthogonal difference is a low-pass smoother whose taps are
``N!/(alpha+2)_N * (alpha+1)_m (beta+1)_{N-m} / ((N-m)! m!)`` for
``m = 0 .. N-1``. The window stops one short of the Hahn support ``0..N``,
which is why the DC gain is ``N/(N+alpha+1)`` rather than 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

import mpmath
import numpy as np

from .errors import (
    OrderExceedsWindow,
    SignalTooShort,
    SingularLowerParameter,
    WindowOutOfRange,
    ZeroArgument,
)
from .exactnum import MPComplex, as_rational, pochhammer, to_mpf
from .hypergeom import pfq, series_coefficients
from .orthopoly import HahnParams, hahn_eval, hahn_norm_ratio, hahn_weight, jacobi_coefficients, jacobi_eval
from .shmaliy import CoefficientVector
from .transfer import z_transform


@dataclass(frozen=True)
class Signal:
    samples: tuple
    origin: int = 0
    period: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple(self.samples))
        for i, v in enumerate(self.samples):
            if isinstance(v, float) and not math.isfinite(v):
                raise ValueError(f"non-finite sample at position {i}")
        if not self.period > 0:
            raise ValueError("sample period must be positive")

    def __len__(self):
        return len(self.samples)

    def at(self, index: int):
        """Sample at absolute ``index`` (origin-relative addressing)."""
        pos = index - self.origin
        if not 0 <= pos < len(self.samples):
            raise WindowOutOfRange(f"index {index} outside the signal")
        return self.samples[pos]


def lowpass_weights(alpha, beta, N: int) -> CoefficientVector:
    alpha, beta = as_rational(alpha), as_rational(beta)
    if N < 1:
        raise ValueError("N must be >= 1")
    den = pochhammer(alpha + 2, N)
    if den == 0:
        raise SingularLowerParameter(N, alpha + 2)
    scale = Fraction(factorial(N)) / den
    taps = tuple(
        scale * pochhammer(alpha + 1, m) * pochhammer(beta + 1, N - m) / (factorial(N - m) * factorial(m))
        for m in range(N)
    )
    return CoefficientVector("hahn_lp", N, taps, "weights", {"alpha": alpha, "beta": beta})


def dc_gain(alpha, N: int) -> Fraction:
    """Tap sum of the ``beta = 0`` filter, ``N / (N + alpha + 1)``."""
    return Fraction(N) / (N + as_rational(alpha) + 1)


def orthogonal_difference(f: Signal, n: int, alpha, beta, N: int, x: int, support: str = "printed"):
    """Order-``n`` orthogonal difference of ``f`` at ``x`` with unit step.

    ``k_n n!/h_n * sum_k f(x+k) Q_n(k; alpha, beta, N) w(k; alpha, beta, N)``.
    With ``support="printed"`` the sum runs over ``k = 0..N-1``; ``"full"``
    uses the whole Hahn support ``k = 0..N``, which makes the result the exact
    ``n``-th derivative for polynomials of degree ``<= n``.
    """
    if n > N:
        raise OrderExceedsWindow(f"order {n} exceeds window {N}")
    if support not in ("printed", "full"):
        raise ValueError("support must be 'printed' or 'full'")
    top = N if support == "printed" else N + 1
    params = HahnParams(alpha, beta, N, n)
    total = 0
    for k in range(top):
        fk = f.at(x + k)
        coeff = hahn_eval(params, k) * hahn_weight(k, alpha, beta, N)
        total += coeff * fk if isinstance(fk, (int, Fraction)) else float(coeff) * fk
    scale = hahn_norm_ratio(n, alpha, beta, N) * factorial(n)
    if isinstance(total, (int, Fraction)):
        return scale * total
    return float(scale) * total


def lp_transfer_direct(alpha, beta, N: int, z):
    return z_transform(lowpass_weights(alpha, beta, N).taps, z)


def _closed_scale(alpha, N):
    return Fraction(N) / (N + alpha + 1)


def lp_transfer_closed(alpha, N: int, z, route: str = "2f1"):
    """``N/(N+alpha+1) z^{1-N} 2F1(1-N, 1; alpha+2; 1-z)`` (the ``beta = 0`` filter).

    ``route="jacobi"`` evaluates the equivalent
    ``N!/(alpha+2)_N z^{1-N} P_{N-1}^{(alpha+1, -alpha-N)}(2z-1)``. Both are
    polynomials in ``z`` and ``1/z``, so ``z = 1`` needs no special handling
    beyond giving the limit ``N/(N+alpha+1)`` exactly. Precision-tagged
    arguments are evaluated with :func:`guard_digits` extra working digits and
    rounded back to the argument's precision.
    """
    alpha = as_rational(alpha)
    if route not in ("2f1", "jacobi"):
        raise ValueError("route must be '2f1' or 'jacobi'")
    if isinstance(z, (int, Fraction)):
        z = Fraction(z)
        if z == 0:
            raise ZeroArgument("z = 0")
        if z == 1:
            return _closed_scale(alpha, N)
        if route == "2f1":
            return _closed_scale(alpha, N) * z ** (1 - N) * pfq([1 - N, 1], [alpha + 2], 1 - z, N - 1)
        scale = Fraction(factorial(N)) / pochhammer(alpha + 2, N)
        return scale * z ** (1 - N) * jacobi_eval(N - 1, alpha + 1, -alpha - N, 2 * z - 1)
    if not isinstance(z, MPComplex):
        z = MPComplex.from_value(z)
    zc = z.mpc
    if zc == 0:
        raise ZeroArgument("z = 0")
    if zc == 1:
        return MPComplex.from_value(_closed_scale(alpha, N), z.digits)
    if route == "2f1":
        coeffs = series_coefficients([1 - N, 1], [alpha + 2], N - 1)
        scale, u = _closed_scale(alpha, N), 1 - zc
    else:
        coeffs = jacobi_coefficients(N - 1, alpha + 1, -alpha - N)
        scale, u = Fraction(factorial(N)) / pochhammer(alpha + 2, N), zc - 1
    with mpmath.workdps(z.digits + guard_digits(coeffs, u)):
        zc = z.mpc
        u = 1 - zc if route == "2f1" else zc - 1
        acc = mpmath.mpc(0)
        for c in reversed(coeffs):
            acc = acc * u + to_mpf(c)
        value = to_mpf(scale) * zc ** (1 - N) * acc
    return MPComplex.from_value(value, z.digits)


def guard_digits(coeffs, u, extra: int = 10) -> int:
    """Extra working digits covering the largest term of ``sum c_k u^k``.

    The closed low-pass forms are alternating sums whose terms grow like
    ``|u|^N`` while the result stays O(1) on the unit circle.
    """
    with mpmath.workdps(15):
        au = abs(mpmath.mpc(u))
        biggest = max(abs(to_mpf(c)) * au**k for k, c in enumerate(coeffs))
        if biggest <= 1:
            return extra
        return int(mpmath.ceil(mpmath.log10(biggest))) + extra


def lp_transfer_printed(alpha: int, N: int, z):
    """Rational closed forms for ``alpha`` in {0, 1, 2}, exact at rational ``z != 1``."""
    z = Fraction(z)
    if alpha == 0:
        return z ** (1 - N) * (z**N - 1) / ((N + 1) * (z - 1))
    if alpha == 1:
        return 2 * z ** (1 - N) * (z ** (N + 1) - (N + 1) * z + N) / ((N + 1) * (N + 2) * (z - 1) ** 2)
    if alpha == 2:
        num = 2 * z ** (N + 2) - (N + 1) * (N + 2) * z**2 + 2 * N * (N + 2) * z - N * (N + 1)
        return 3 * z ** (1 - N) * num / ((N + 1) * (N + 2) * (N + 3) * (z - 1) ** 3)
    raise ValueError("printed closed forms exist for alpha in {0, 1, 2}")


def lp_transfer_general_beta(alpha, beta, N: int, z):
    """``(b+1)_N/(a+2)_N 2F1(-N, a+1; -b-N; 1/z) - (a+1)_N/(a+2)_N z^{-N}``.

    Undefined at ``beta = 0``: the lower parameter ``-N`` then coincides with
    the terminating upper one. Use :func:`lp_transfer_closed` there.
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    if beta == 0:
        raise SingularLowerParameter(N, -N, "beta = 0: lower parameter -N coincides with upper -N; "
                                            "use lp_transfer_closed")
    den = pochhammer(alpha + 2, N)
    a_coef = pochhammer(beta + 1, N) / den
    b_coef = pochhammer(alpha + 1, N) / den
    if isinstance(z, (int, Fraction)):
        z = Fraction(z)
        if z == 0:
            raise ZeroArgument("z = 0")
        return a_coef * pfq([-N, alpha + 1], [-beta - N], 1 / z, N) - b_coef * z ** (-N)
    if not isinstance(z, MPComplex):
        z = MPComplex.from_value(z)
    if z.mpc == 0:
        raise ZeroArgument("z = 0")
    coeffs = series_coefficients([-N, alpha + 1], [-beta - N], N)
    with mpmath.workdps(z.digits + guard_digits(coeffs, 1 / z.mpc)):
        zc = z.mpc
        w = 1 / zc
        acc = mpmath.mpc(0)
        for c in reversed(coeffs):
            acc = acc * w + to_mpf(c)
        value = to_mpf(a_coef) * acc - to_mpf(b_coef) * zc ** (-N)
    return MPComplex.from_value(value, z.digits)


@dataclass
class UnbiasednessReport:
    alpha: Fraction
    N: int
    quad_points: int
    I1: complex
    I2: complex
    oracle1: float
    oracle2: float

    @property
    def err1(self) -> float:
        return abs(self.I1 - self.oracle1)

    @property
    def err2(self) -> float:
        return abs(self.I2 - self.oracle2)

    @property
    def integrals_equal(self) -> bool:
        return abs(self.I1 - self.I2) <= 1e-10

    @property
    def both_zero(self) -> bool:
        return abs(self.I1) <= 1e-10 and abs(self.I2) <= 1e-10

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "N": self.N,
            "quad_points": self.quad_points,
            "I1": [self.I1.real, self.I1.imag],
            "I2": [self.I2.real, self.I2.imag],
            "oracle1": self.oracle1,
            "oracle2": self.oracle2,
            "err1": self.err1,
            "err2": self.err2,
            "integrals_equal": self.integrals_equal,
            "both_zero": self.both_zero,
            "note": "a finite FIR has I1 = 2*pi*h[0] and I2 = 2*pi*sum(h^2); neither is zero",
        }


def unbiasedness_integrals(alpha, N: int, quad_points: int) -> UnbiasednessReport:
    """Trapezoid integrals of ``H`` and ``|H|^2`` over one period of the unit circle."""
    if quad_points < 4 * N:
        raise ValueError("quad_points must be >= 4N")
    taps = lowpass_weights(alpha, 0, N).taps
    h = np.array([float(t) for t in taps])
    omega = 2 * np.pi * np.arange(quad_points) / quad_points
    # H(e^{jw}) = sum_m h[m] e^{-jmw}
    H = np.exp(-1j * np.outer(omega, np.arange(N))) @ h
    step = 2 * np.pi / quad_points
    I1 = complex(step * H.sum())
    I2 = complex(step * (np.abs(H) ** 2).sum())
    oracle1 = 2 * np.pi * float(taps[0])
    oracle2 = 2 * np.pi * float(sum(t * t for t in taps))
    return UnbiasednessReport(as_rational(alpha), N, quad_points, I1, I2, oracle1, oracle2)


def apply_fir(signal: Signal, coeffs: CoefficientVector | Sequence) -> Signal:
    """``out[x] = sum_n taps[n] * signal[x+n]`` over every full window.

    Exact when both taps and samples are rational; float otherwise.
    """
    taps = coeffs.taps if isinstance(coeffs, CoefficientVector) else tuple(coeffs)
    N = len(taps)
    L = len(signal.samples)
    if L < N:
        raise SignalTooShort(f"signal has {L} samples, window needs {N}")
    exact = all(isinstance(v, (int, Fraction)) for v in signal.samples)
    if exact:
        out = [
            sum((taps[n] * signal.samples[x + n] for n in range(N)), Fraction(0))
            for x in range(L - N + 1)
        ]
    else:
        s = np.asarray(signal.samples, dtype=float)
        h = np.array([float(t) for t in taps])
        out = [float(v) for v in np.correlate(s, h, mode="valid")]
    return Signal(out, signal.origin, signal.period)
