"""Transfer function of the Shmaliy smoother and a precision-cancellation probe.

The closed form

    H_m(z, N) = 1 - (1-z)^{-(m+1)} Gamma(N) Gamma(m+2) / Gamma(N+m+1)
                  * [P_{m+1}^{(N-1, -2-2m)}(1-2z) - z^{1-N} P_m^{(1-N, -2-2m)}(1-2z)]

subtracts two nearly equal Jacobi values when z is close to 1, so at small
omega*T it loses roughly (m+1)*log10(1/omega*T) digits. The direct N-term sum
is the oracle it is compared against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .errors import NearSingular, OrderTooLarge, ZeroArgument
from .exactnum import DEFAULT_DIGITS, MPComplex, gamma_ratio, relative_error, to_mpf
from .orthopoly import jacobi_eval
from .shmaliy import CoefficientVector, shmaliy_taps


def z_transform(taps: Sequence[Fraction], z):
    """``sum_n taps[n] z^{-n}`` by Horner's rule in ``1/z``.

    Exact for rational ``z``; :class:`MPComplex` in, :class:`MPComplex` out at
    the same precision; ``complex`` otherwise.
    """
    if isinstance(z, MPComplex):
        if z.re == 0 and z.im == 0:
            raise ZeroArgument("z = 0")
        with mpmath.workdps(z.digits):
            w = 1 / z.mpc
            acc = mpmath.mpc(0)
            for t in reversed(taps):
                acc = acc * w + to_mpf(t)
            return MPComplex.from_value(acc, z.digits)
    if isinstance(z, (int, Fraction)):
        if z == 0:
            raise ZeroArgument("z = 0")
        w = 1 / Fraction(z)
        acc = Fraction(0)
        for t in reversed(taps):
            acc = acc * w + t
        return acc
    z = complex(z)
    if z == 0:
        raise ZeroArgument("z = 0")
    return complex(np.polyval(np.array([float(t) for t in taps[::-1]]), 1 / z))


def transfer_direct(m: int, N: int, z, coeffs: CoefficientVector | None = None):
    if coeffs is None:
        coeffs = shmaliy_taps(m, N)
    return z_transform(coeffs.taps, z)


def default_guard(digits: int) -> float:
    return 10.0 ** (-digits / 2)


def transfer_closed(m: int, N: int, z, guard: float | None = None):
    """Closed Jacobi-polynomial form of ``H_m(z, N)``.

    ``z`` may be :class:`MPComplex` or an exact rational. Raises
    :class:`NearSingular` when ``|z - 1|`` is below ``guard`` (default
    ``10**(-digits/2)``; exact rationals only reject ``z == 1``).
    """
    if m + 1 > N:
        raise OrderTooLarge(f"order exceeds window: m={m}, N={N}")
    g = gamma_ratio([N, m + 2], [N + m + 1])
    if isinstance(z, (int, Fraction)):
        z = Fraction(z)
        if z == 0:
            raise ZeroArgument("z = 0")
        if z == 1:
            raise NearSingular("z = 1 is a removable pole of the closed form")
        x = 1 - 2 * z
        bracket = jacobi_eval(m + 1, N - 1, -2 - 2 * m, x) - z ** (1 - N) * jacobi_eval(m, 1 - N, -2 - 2 * m, x)
        return 1 - (1 / (1 - z)) ** (m + 1) * g * bracket
    if not isinstance(z, MPComplex):
        z = MPComplex.from_value(z)
    digits = z.digits
    with mpmath.workdps(digits):
        zc = z.mpc
        if zc == 0:
            raise ZeroArgument("z = 0")
        eps = default_guard(digits) if guard is None else guard
        if abs(zc - 1) < eps:
            raise NearSingular(f"|z-1| = {mpmath.nstr(abs(zc - 1), 5)} below guard {eps:g}")
        x = MPComplex.from_value(1 - 2 * zc, digits)
        p_hi = jacobi_eval(m + 1, N - 1, -2 - 2 * m, x).mpc
        p_lo = jacobi_eval(m, 1 - N, -2 - 2 * m, x).mpc
        bracket = p_hi - zc ** (1 - N) * p_lo
        value = 1 - (1 / (1 - zc)) ** (m + 1) * to_mpf(g) * bracket
        return MPComplex.from_value(value, digits)


@dataclass
class ResponseSample:
    omega_t: float
    value: MPComplex
    magnitude: mpmath.mpf
    phase: mpmath.mpf
    digits: int
    route: str = "closed"

    @classmethod
    def from_value(cls, omega_t, value: MPComplex, route: str) -> "ResponseSample":
        return cls(float(omega_t), value, abs(value), value.arg(), value.digits, route)

    def csv_row(self) -> list[str]:
        d = self.digits
        return [
            repr(self.omega_t),
            mpmath.nstr(self.value.re, d),
            mpmath.nstr(self.value.im, d),
            mpmath.nstr(self.magnitude, d),
            mpmath.nstr(self.phase, d),
            str(d),
        ]


RESPONSE_HEADER = ["omega_t", "re", "im", "abs", "arg", "digits"]


def log_grid(lo: float, hi: float, points: int) -> list[float]:
    if points == 1:
        return [float(lo)]
    return [float(v) for v in np.geomspace(lo, hi, points)]


def linear_grid(lo: float, hi: float, points: int) -> list[float]:
    if points == 1:
        return [float(lo)]
    return [float(v) for v in np.linspace(lo, hi, points)]


def _check_grid(grid):
    for w in grid:
        if not 0 < w < 2 * np.pi:
            raise ValueError(f"omega_t={w} outside (0, 2*pi)")


def frequency_response(m: int, N: int, grid: Sequence[float], digits: int = DEFAULT_DIGITS,
                       guard: float | None = None) -> list[ResponseSample]:
    """Closed-form response over ``grid``, falling back to the direct sum near z = 1."""
    if digits < 9:
        raise ValueError("digits must be >= 9")
    _check_grid(grid)
    coeffs = None
    out = []
    for w in grid:
        z = MPComplex.expj(w, digits)
        try:
            value, route = transfer_closed(m, N, z, guard), "closed"
        except NearSingular:
            if coeffs is None:
                coeffs = shmaliy_taps(m, N)
            value, route = transfer_direct(m, N, z, coeffs), "direct"
        out.append(ResponseSample.from_value(w, value, route))
    return out


@dataclass
class CancellationRow:
    omega_t: float
    low: MPComplex
    high: MPComplex
    oracle: MPComplex
    rel_err_low: mpmath.mpf
    rel_err_high: mpmath.mpf
    fallback_low: bool = False
    fallback_high: bool = False

    def to_json(self) -> dict:
        return {
            "omega_t": self.omega_t,
            "low": self.low.to_json(),
            "high": self.high.to_json(),
            "oracle": self.oracle.to_json(),
            "rel_err_low": mpmath.nstr(self.rel_err_low, 6),
            "rel_err_high": mpmath.nstr(self.rel_err_high, 6),
            "fallback_low": self.fallback_low,
            "fallback_high": self.fallback_high,
        }


@dataclass
class CancellationReport:
    m: int
    N: int
    low_digits: int
    high_digits: int
    rows: list = field(default_factory=list)

    @property
    def max_rel_err_low(self):
        return max((r.rel_err_low for r in self.rows), default=mpmath.mpf(0))

    @property
    def max_rel_err_high(self):
        return max((r.rel_err_high for r in self.rows), default=mpmath.mpf(0))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "N": self.N,
            "low_digits": self.low_digits,
            "high_digits": self.high_digits,
            "max_rel_err_low": mpmath.nstr(self.max_rel_err_low, 6),
            "max_rel_err_high": mpmath.nstr(self.max_rel_err_high, 6),
            "rows": [r.to_json() for r in self.rows],
        }


def cancellation_report(m: int, N: int, grid: Sequence[float], low_digits: int,
                        high_digits: int) -> CancellationReport:
    """Closed form at two precisions against the direct sum at the higher one."""
    if low_digits >= high_digits:
        raise ValueError("low_digits must be below high_digits")
    _check_grid(grid)
    report = CancellationReport(m, N, low_digits, high_digits)
    if not grid:
        return report
    coeffs = shmaliy_taps(m, N)
    for w in grid:
        z_hi = MPComplex.expj(w, high_digits)
        oracle = transfer_direct(m, N, z_hi, coeffs)
        values = []
        for d in (low_digits, high_digits):
            z = MPComplex.expj(w, d)
            try:
                values.append((transfer_closed(m, N, z), False))
            except NearSingular:
                values.append((transfer_direct(m, N, z, coeffs), True))
        (low, fb_lo), (high, fb_hi) = values
        with mpmath.workdps(high_digits):
            err_lo = relative_error(low, oracle)
            err_hi = relative_error(high, oracle)
        report.rows.append(CancellationRow(float(w), low, high, oracle, err_lo, err_hi, fb_lo, fb_hi))
    return report
