"""Shmaliy unbiased-FIR polynomials ``h_m(n, N)`` built by five independent routes.

All routes return exact :class:`CoefficientVector` objects so they can be
compared tap by tap:

* ``hankel``      -- first-column minors of the moment matrix over its determinant
* ``recurrence``  -- three-term recurrence in ``m`` started from ``h_0 = 1/N``
* ``hyp_full``    -- the 3F2 with lower parameters ``n-m`` and ``1-N-m+n``,
  with the singular Pochhammer quotients cancelled term by term
* ``hyp_simple``  -- ``(m+1)^2/N * 3F2(-m, n+1, m+2; 2, N+1; 1)``
* ``hahn_closed`` -- ``(m+1)^2/N * Q_m(-1-n; 1, 0, -1-N)``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import OrderTooLarge
from .exactnum import format_rational, gamma_ratio, pochhammer
from .hypergeom import pfq
from .orthopoly import HahnParams, hahn_eval, hankel_build

ROUTES = ("hankel", "recurrence", "hyp_full", "hyp_simple", "hahn_closed")


@dataclass(frozen=True)
class CoefficientVector:
    """FIR impulse response with exact taps.

    ``family`` is ``"shmaliy"`` (parameter ``m``) or ``"hahn_lp"``
    (parameters ``alpha``, ``beta``).
    """

    family: str
    N: int
    taps: tuple
    route: str
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(self.taps) != self.N:
            raise ValueError(f"expected {self.N} taps, got {len(self.taps)}")

    def __len__(self):
        return self.N

    def __getitem__(self, n):
        return self.taps[n]

    def same_taps(self, other: "CoefficientVector") -> bool:
        return self.taps == other.taps

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "N": self.N,
            "route": self.route,
            "params": {k: format_rational(v) if isinstance(v, Fraction) else v
                       for k, v in self.params.items()},
            "taps": [
                {"n": n, "numerator": t.numerator, "denominator": t.denominator,
                 "float64": float(t)}
                for n, t in enumerate(self.taps)
            ],
        }


def _check(m: int, N: int):
    if m < 0 or N < 1:
        raise ValueError("need m >= 0 and N >= 1")
    if m + 1 > N:
        raise OrderTooLarge(f"order exceeds window: m={m} needs N >= {m + 1}, got N={N}")


def _vector(m, N, taps, route):
    return CoefficientVector("shmaliy", N, tuple(taps), route, {"m": m})


def hankel_coefficients(m: int, N: int) -> list[Fraction]:
    """Polynomial coefficients ``a_{im}(N)``, i = 0..m, from moment-matrix minors."""
    _check(m, N)
    H = hankel_build(m, N)
    det = H.determinant()
    return [(-1) ** i * H.minor(i, 0) / det for i in range(m + 1)]


def shmaliy_hankel(m: int, N: int) -> CoefficientVector:
    a = hankel_coefficients(m, N)
    taps = []
    for n in range(N):
        acc = Fraction(0)
        for c in reversed(a):
            acc = acc * n + c
        taps.append(acc)
    return _vector(m, N, taps, "hankel")


def shmaliy_recurrence(m: int, N: int) -> CoefficientVector:
    """Three-term recurrence with the second term acting on ``h_{m-2}``."""
    _check(m, N)
    prev = [Fraction(0)] * N
    cur = [Fraction(1, N)] * N
    for k in range(1, m + 1):
        c2 = Fraction((2 * k + 1) * (N - k), (2 * k - 1) * (N + k))
        den = k * (2 * k - 1) * (N + k)
        nxt = [
            Fraction(2 * (k * k * (2 * N - 1) - (4 * k * k - 1) * n), den) * cur[n] - c2 * prev[n]
            for n in range(N)
        ]
        prev, cur = cur, nxt
    return _vector(m, N, cur, "recurrence")


def shmaliy_hyp_full_tap(m: int, n: int, N: int) -> Fraction:
    # (n-m)_m/(n-m)_k = (n-m+k)_{m-k};  (N-n)_m/(1-N-m+n)_k = (-1)^k (N-n)_{m-k}
    prefactor = Fraction((-1) ** m * (m + 1)) / (factorial(m) * pochhammer(N, m + 1))
    total = Fraction(0)
    for k in range(m + 1):
        term = pochhammer(-m, k) * pochhammer(n + 1, k) * pochhammer(1 - N + n, k) / factorial(k)
        if term == 0:
            continue
        term *= pochhammer(n - m + k, m - k) * (-1) ** k * pochhammer(N - n, m - k)
        total += term
    return prefactor * total


def shmaliy_hyp_full(m: int, N: int) -> CoefficientVector:
    _check(m, N)
    return _vector(m, N, [shmaliy_hyp_full_tap(m, n, N) for n in range(N)], "hyp_full")


def shmaliy_hyp_simple(m: int, N: int) -> CoefficientVector:
    _check(m, N)
    scale = Fraction((m + 1) ** 2, N)
    taps = [scale * pfq([-m, n + 1, m + 2], [2, N + 1], Fraction(1), m) for n in range(N)]
    return _vector(m, N, taps, "hyp_simple")


def shmaliy_hahn_closed(m: int, N: int) -> CoefficientVector:
    _check(m, N)
    scale = Fraction((m + 1) ** 2, N)
    p = HahnParams(1, 0, -1 - N, m)
    return _vector(m, N, [scale * hahn_eval(p, -1 - n) for n in range(N)], "hahn_closed")


ROUTE_FUNCTIONS = {
    "hankel": shmaliy_hankel,
    "recurrence": shmaliy_recurrence,
    "hyp_full": shmaliy_hyp_full,
    "hyp_simple": shmaliy_hyp_simple,
    "hahn_closed": shmaliy_hahn_closed,
}


def shmaliy_taps(m: int, N: int, route: str = "hyp_simple") -> CoefficientVector:
    try:
        fn = ROUTE_FUNCTIONS[route]
    except KeyError:
        raise ValueError(f"unknown route {route!r}; choose from {ROUTES}") from None
    return fn(m, N)


def all_routes(m: int, N: int) -> dict[str, CoefficientVector]:
    return {name: fn(m, N) for name, fn in ROUTE_FUNCTIONS.items()}


def routes_agree(m: int, N: int) -> bool:
    vecs = list(all_routes(m, N).values())
    return all(v.same_taps(vecs[0]) for v in vecs[1:])


# Explicit low-order formulas as printed in the literature.
def printed_h(m: int, n, N) -> Fraction:
    n, N = Fraction(n), Fraction(N)
    if m == 0:
        return 1 / N
    if m == 1:
        return (2 * (2 * N - 1) - 6 * n) / (N * (N + 1))
    if m == 2:
        return (3 * (3 * N**2 - 3 * N + 2) - 18 * (2 * N - 1) * n + 30 * n**2) / (N * (N + 1) * (N + 2))
    if m == 3:
        D = N * (N + 1) * (N + 2) * (N + 3)
        return (120 * (2 * N - 1) * n**2 - 140 * n**3) / D - (
            8 * (2 * N**3 - 3 * N**2 + 7 * N - 3) + 20 * (6 * N**2 - 6 * N + 5) * n
        ) / D
    raise ValueError("printed formulas exist for m = 0..3 only")


def h3_sign_corrected(n, N) -> Fraction:
    """``h_3`` with the constant term ``8(2N^3 - 3N^2 + 7N - 3)`` taken positive."""
    n, N = Fraction(n), Fraction(N)
    D = N * (N + 1) * (N + 2) * (N + 3)
    return (
        8 * (2 * N**3 - 3 * N**2 + 7 * N - 3)
        - 20 * (6 * N**2 - 6 * N + 5) * n
        + 120 * (2 * N - 1) * n**2
        - 140 * n**3
    ) / D


def orthogonality_weight(n: int, N: int) -> Fraction:
    return Fraction(2 * n, N * (N - 1))


def norm_squared_gamma(m: int, N: int) -> Fraction:
    """``(m+1) Gamma(N-1) Gamma(N) / (Gamma(N-m-1) N Gamma(N+m+1))`` exactly."""
    return (m + 1) * gamma_ratio([N - 1, N], [N - m - 1, N + m + 1]) / N


def norm_squared_pochhammer_printed(m: int, N: int) -> Fraction:
    """``(m+1)(N-m-1) / (N (N)_{m+1})``; agrees with the Gamma form only at m = 1."""
    return Fraction((m + 1) * (N - m - 1)) / (N * pochhammer(N, m + 1))


@dataclass
class PropertyCheck:
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"check": self.name, "lhs": format_rational(self.lhs),
                "rhs": format_rational(self.rhs), "holds": self.holds}


@dataclass
class ShmaliyReport:
    m: int
    N: int
    checks: list
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)

    def to_json(self) -> dict:
        return {"m": self.m, "N": self.N, "ok": self.ok,
                "checks": [c.to_json() for c in self.checks], "notes": self.notes}


def verify_shmaliy_properties(m: int, N: int, route: str = "hyp_simple") -> ShmaliyReport:
    """Exact check of unit gain, moment annihilation and weighted orthogonality.

    Orthogonality is checked against every lower order ``q <= m``; the diagonal
    norm uses the Gamma-function form. The Pochhammer form of the norm is
    compared too, but only recorded as a note.
    """
    _check(m, N)
    if N < 2:
        raise ValueError("orthogonality weight needs N >= 2")
    h = shmaliy_taps(m, N, route).taps
    checks = [PropertyCheck("sum", sum(h, Fraction(0)), Fraction(1))]
    for q in range(1, m + 1):
        checks.append(PropertyCheck(f"moment_{q}", sum((Fraction(n) ** q * h[n] for n in range(N)), Fraction(0)), Fraction(0)))
    rho = [orthogonality_weight(n, N) for n in range(N)]
    for q in range(m + 1):
        hq = h if q == m else shmaliy_taps(q, N, route).taps
        lhs = sum((rho[n] * h[n] * hq[n] for n in range(N)), Fraction(0))
        rhs = norm_squared_gamma(m, N) if q == m else Fraction(0)
        checks.append(PropertyCheck(f"orthogonality_{m}_{q}", lhs, rhs))
    report = ShmaliyReport(m, N, checks)
    printed = norm_squared_pochhammer_printed(m, N)
    if printed != norm_squared_gamma(m, N):
        report.notes.append(
            f"Pochhammer form of the norm gives {format_rational(printed)}, "
            f"Gamma form gives {format_rational(norm_squared_gamma(m, N))}"
        )
    return report
