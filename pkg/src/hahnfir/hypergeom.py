"""Terminating generalized hypergeometric series and unit-argument 3F2 rewrites."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import mpmath

from .errors import InvalidForm, SingularLowerParameter
from .exactnum import MPComplex, as_rational, format_rational, pochhammer, to_mpf


@dataclass(frozen=True)
class PFQSpec:
    """``pFq(upper; lower; argument)`` summed for k = 0 .. terms inclusive."""

    upper: tuple
    lower: tuple
    argument: object
    terms: int

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(as_rational(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(as_rational(b) for b in self.lower))
        if self.terms < 0:
            raise ValueError("terms must be nonnegative")


def check_lower(lower: Sequence[Fraction], terms: int) -> None:
    """Raise if any ``(b)_k`` vanishes for some ``k <= terms``."""
    for b in lower:
        if b.denominator == 1 and b <= 0 and -b < terms:
            raise SingularLowerParameter(int(-b) + 1, b)


def series_coefficients(upper, lower, terms: int) -> list[Fraction]:
    """Exact coefficients ``prod (a)_k / prod (b)_k / k!`` for k = 0 .. terms."""
    upper = [as_rational(a) for a in upper]
    lower = [as_rational(b) for b in lower]
    check_lower(lower, terms)
    coeffs = [Fraction(1)]
    t = Fraction(1)
    for k in range(terms):
        num = Fraction(1)
        for a in upper:
            num *= a + k
        den = Fraction(k + 1)
        for b in lower:
            den *= b + k
        t = t * num / den
        coeffs.append(t)
    return coeffs


def _horner(coeffs, x):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def eval_pfq(spec: PFQSpec):
    """Evaluate a terminating series.

    Rational arguments give an exact :class:`~fractions.Fraction`; an
    :class:`MPComplex` argument gives an :class:`MPComplex` at the argument's
    precision; Python ``complex``/``float`` arguments give ``complex``.
    """
    coeffs = series_coefficients(spec.upper, spec.lower, spec.terms)
    x = spec.argument
    if isinstance(x, MPComplex):
        with mpmath.workdps(x.digits):
            value = _horner([to_mpf(c) for c in coeffs], x.mpc)
            return MPComplex.from_value(value, x.digits)
    if isinstance(x, (int, Fraction)):
        return _horner(coeffs, Fraction(x))
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return _horner([to_mpf(c) for c in coeffs], x)
    return _horner([float(c) for c in coeffs], complex(x))


def pfq(upper, lower, argument, terms: int):
    return eval_pfq(PFQSpec(tuple(upper), tuple(lower), argument, terms))


def _pq(num_args, den_args, n) -> Fraction:
    """Exact ``prod (p)_n / prod (q)_n``; a vanishing denominator is singular."""
    den = Fraction(1)
    for q in den_args:
        v = pochhammer(q, n)
        if v == 0:
            raise SingularLowerParameter(n, q, f"prefactor denominator ({q})_{n} vanishes")
        den *= v
    num = Fraction(1)
    for p in num_args:
        num *= pochhammer(p, n)
    return num / den


# Each form maps (n, a, b, c, d) to (prefactor, upper, lower) for the right-hand
# side of 3F2(-n, a, b; c, d; 1) = prefactor * 3F2(upper; lower; 1).
def _a1(n, a, b, c, d):
    return _pq([c - a, d - a], [c, d], n), [-n, a, a + b - c - d - n + 1], [a - c - n + 1, a - d - n + 1]


def _a2(n, a, b, c, d):
    # printed with (d)_n typeset beside the fraction; it belongs in the denominator
    return _pq([a, c + d - a - b], [c, d], n), [-n, c - a, d - a], [1 - a - n, c + d - a - b]


def _a3(n, a, b, c, d):
    return _pq([c + d - a - b], [c], n), [-n, d - a, d - b], [d, c + d - a - b]


def _a4(n, a, b, c, d):
    return (-1) ** n * _pq([a, b], [c, d], n), [-n, 1 - c - n, 1 - d - n], [1 - a - n, 1 - b - n]


def _a5(n, a, b, c, d):
    # A3 followed by A4; the third upper parameter carries the +1
    return (
        (-1) ** n * _pq([d - a, d - b], [c, d], n),
        [-n, 1 - d - n, a + b - c - d - n + 1],
        [a - d - n + 1, b - d - n + 1],
    )


def _a5_printed(n, a, b, c, d):
    return (
        (-1) ** n * _pq([d - a, d - b], [c, d], n),
        [-n, 1 - d - n, a + b - c - d - n],
        [a - d - n + 1, b - d - n + 1],
    )


def _a6(n, a, b, c, d):
    return _pq([c - a], [c], n), [-n, a, d - b], [d, a - c - n + 1]


def _a7(n, a, b, c, d):
    return _pq([c - a, b], [c, d], n), [-n, d - b, 1 - c - n], [1 - b - n, a - c - n + 1]


THOMAE_FORMS: dict[str, Callable] = {
    "A1": _a1,
    "A2": _a2,
    "A3": _a3,
    "A4": _a4,
    "A5": _a5,
    "A6": _a6,
    "A7": _a7,
}

# verbatim transcriptions that differ from the working identities above
PRINTED_VARIANTS: dict[str, Callable] = {"A5-printed": _a5_printed}


def thomae_transform(form: str, n: int, a, b, c, d) -> tuple[Fraction, PFQSpec]:
    """Right-hand side of the chosen unit-argument 3F2 transformation.

    Returns ``(prefactor, spec)`` such that
    ``prefactor * eval_pfq(spec) == 3F2(-n, a, b; c, d; 1)``.
    """
    fn = THOMAE_FORMS.get(form) or PRINTED_VARIANTS.get(form)
    if fn is None:
        raise InvalidForm(f"unknown transformation {form!r}")
    a, b, c, d = (as_rational(v) for v in (a, b, c, d))
    prefactor, upper, lower = fn(n, a, b, c, d)
    spec = PFQSpec(tuple(upper), tuple(lower), Fraction(1), n)
    check_lower(spec.lower, n)
    return prefactor, spec


@dataclass
class ThomaeCheck:
    holds: bool
    lhs: Fraction | None = None
    rhs: Fraction | None = None
    skipped: str | None = None


def verify_thomae(form: str, n: int, a, b, c, d) -> ThomaeCheck:
    try:
        lhs = pfq([-n, a, b], [c, d], Fraction(1), n)
        prefactor, spec = thomae_transform(form, n, a, b, c, d)
        rhs = prefactor * eval_pfq(spec)
    except SingularLowerParameter as exc:
        return ThomaeCheck(holds=False, skipped=str(exc))
    return ThomaeCheck(holds=lhs == rhs, lhs=lhs, rhs=rhs)


@dataclass
class ThomaeReport:
    form: str
    trials: int
    holds: int
    skipped: int
    seed: int
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.holds == self.trials and not self.counterexamples

    def to_json(self) -> dict:
        return {
            "form": self.form,
            "trials": self.trials,
            "holds": self.holds,
            "skipped": self.skipped,
            "seed": self.seed,
            "counterexamples": self.counterexamples,
        }


def random_thomae_params(rng: random.Random, max_n: int = 8):
    n = rng.randint(0, max_n)
    a, b, c, d = (Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(4))
    return n, a, b, c, d


def run_thomae_suite(form: str, trials: int = 200, seed: int = 0, max_n: int = 8,
                     max_counterexamples: int = 5) -> ThomaeReport:
    """Check one transformation on ``trials`` screened random parameter tuples.

    Tuples that hit a vanishing lower Pochhammer on either side are counted as
    skipped and replaced, so ``trials`` is the number of actual comparisons.
    """
    rng = random.Random(f"{seed}:{form}")
    report = ThomaeReport(form=form, trials=0, holds=0, skipped=0, seed=seed)
    attempts = 0
    while report.trials < trials:
        attempts += 1
        if attempts > 100 * trials:
            break
        n, a, b, c, d = random_thomae_params(rng, max_n)
        check = verify_thomae(form, n, a, b, c, d)
        if check.skipped:
            report.skipped += 1
            continue
        report.trials += 1
        if check.holds:
            report.holds += 1
        elif len(report.counterexamples) < max_counterexamples:
            report.counterexamples.append({
                "params": {"n": n, **{k: format_rational(v) for k, v in zip("abcd", (a, b, c, d))}},
                "lhs": format_rational(check.lhs),
                "rhs": format_rational(check.rhs),
            })
    return report
