"""Command-line front end: ``hahnfir {coeffs,response,filter,verify,cancel-report}``."""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import fileio
from .errors import HahnFirError
from .exactnum import DEFAULT_DIGITS, MPComplex
from .hypergeom import PRINTED_VARIANTS, THOMAE_FORMS, run_thomae_suite
from .identity_suite import run_suite
from .lowpass import apply_fir, lowpass_weights, lp_transfer_closed, lp_transfer_general_beta
from .shmaliy import (
    all_routes,
    h3_sign_corrected,
    printed_h,
    routes_agree,
    shmaliy_taps,
    verify_shmaliy_properties,
)
from .transfer import ResponseSample, cancellation_report, frequency_response, linear_grid, log_grid

DIGITS_ENV = "HAHNFIR_DIGITS"


class UsageError(Exception):
    """Invalid parameters; maps to exit code 2."""


@dataclass
class RunConfig:
    command: str
    family: str = "shmaliy"
    m: int = 1
    N: int = 8
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    grid: str = "log"
    wmin: float = 1e-4
    wmax: float = math.pi
    points: int = 512
    digits: int = DEFAULT_DIGITS
    low_digits: int = 9
    high_digits: int = 50
    input: str | None = None
    output: str | None = None
    format: str = "csv"
    seed: int = 0
    suite: str = "all"
    trials: int | None = None
    exact: bool = False
    route: str = "hyp_simple"

    def validate(self):
        if self.N < 1:
            raise UsageError("N must be >= 1")
        if self.family == "shmaliy":
            if self.m < 0:
                raise UsageError("m must be >= 0")
            if self.m + 1 > self.N:
                raise UsageError(f"order exceeds window: m={self.m} needs N >= {self.m + 1}")
        if self.command in ("response", "cancel-report"):
            if self.digits < 9 or self.low_digits < 9:
                raise UsageError("digits must be >= 9")
            if self.points < 1:
                raise UsageError("points must be >= 1")
            if not 0 < self.wmin <= self.wmax < 2 * math.pi:
                raise UsageError("need 0 < wmin <= wmax < 2*pi")
        if self.command == "cancel-report" and self.low_digits >= self.high_digits:
            raise UsageError("low-digits must be below high-digits")

    def omega_grid(self) -> list[float]:
        make = log_grid if self.grid == "log" else linear_grid
        return make(self.wmin, self.wmax, self.points)


def _coefficients(cfg: RunConfig):
    if cfg.family == "shmaliy":
        vec = shmaliy_taps(cfg.m, cfg.N, cfg.route)
        agree = routes_agree(cfg.m, cfg.N)
    else:
        vec = lowpass_weights(cfg.alpha, cfg.beta, cfg.N)
        agree = True
    return vec, agree


def _emit(cfg: RunConfig, text: str):
    if cfg.output:
        with open(cfg.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_coeffs(cfg: RunConfig) -> int:
    vec, agree = _coefficients(cfg)
    if cfg.format == "json":
        _emit(cfg, fileio.coefficients_json(vec, routes_agree=agree))
    else:
        _emit(cfg, fileio.coefficients_csv(vec))
        print(f"routes agree: {'yes' if agree else 'no'}", file=sys.stderr)
    return 0 if agree else 1


def _lp_response(cfg: RunConfig) -> list[ResponseSample]:
    out = []
    for w in cfg.omega_grid():
        z = MPComplex.expj(w, cfg.digits)
        if cfg.beta == 0:
            value, route = lp_transfer_closed(cfg.alpha, cfg.N, z), "closed"
        else:
            value, route = lp_transfer_general_beta(cfg.alpha, cfg.beta, cfg.N, z), "general_beta"
        out.append(ResponseSample.from_value(w, value, route))
    return out


def cmd_response(cfg: RunConfig) -> int:
    if cfg.family == "shmaliy":
        samples = frequency_response(cfg.m, cfg.N, cfg.omega_grid(), cfg.digits)
    else:
        samples = _lp_response(cfg)
    _emit(cfg, fileio.response_csv(samples))
    return 0


def cmd_filter(cfg: RunConfig) -> int:
    if not cfg.input:
        raise UsageError("--input is required")
    try:
        with open(cfg.input) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {cfg.input}: {exc}") from None
    try:
        signal = fileio.parse_signal(text, exact=cfg.exact)
    except fileio.ParseError as exc:
        raise UsageError(str(exc)) from None
    vec, _ = _coefficients(cfg)
    out = apply_fir(signal, vec)
    if cfg.family == "shmaliy":
        params = f"m={cfg.m} N={cfg.N}"
    else:
        params = f"alpha={cfg.alpha} beta={cfg.beta} N={cfg.N}"
    comments = [f"family={cfg.family}", f"params: {params}", f"route={vec.route}",
                f"arithmetic={'exact' if cfg.exact else 'float64'}"]
    _emit(cfg, fileio.signal_csv(out, comments))
    return 0


def _shmaliy_suite() -> tuple[dict, bool]:
    routes = []
    for N in range(4, 17):
        for m in range(min(6, N - 2) + 1):
            vecs = all_routes(m, N)
            ref = vecs["hankel"]
            mismatched = [name for name, v in vecs.items() if not v.same_taps(ref)]
            routes.append({"m": m, "N": N, "agree": not mismatched, "mismatched": mismatched})
    properties = []
    for N in range(2, 17):
        for m in range(min(5, N - 1) + 1):
            properties.append(verify_shmaliy_properties(m, N).to_json())
    printed = []
    for m in range(4):
        for N in range(4, 13):
            taps = shmaliy_taps(m, N).taps
            bad = [n for n in range(N) if printed_h(m, n, N) != taps[n]]
            printed.append({"m": m, "N": N, "matches_printed": not bad})
    corrected_h3 = all(
        h3_sign_corrected(n, N) == shmaliy_taps(3, N).taps[n] for N in range(4, 13) for n in range(N)
    )
    ok = all(r["agree"] for r in routes) and all(p["ok"] for p in properties)
    return {
        "five_route_equivalence": routes,
        "properties": properties,
        "printed_formulas": printed,
        "h3_sign_corrected_matches": corrected_h3,
        "ok": ok,
    }, ok


def _thomae_suite(trials: int, seed: int) -> tuple[dict, bool]:
    reports = [run_thomae_suite(form, trials, seed) for form in THOMAE_FORMS]
    errata = [run_thomae_suite(form, trials, seed) for form in PRINTED_VARIANTS]
    ok = all(r.ok for r in reports)
    return {"forms": [r.to_json() for r in reports],
            "printed_variants": [r.to_json() for r in errata], "ok": ok}, ok


def cmd_verify(cfg: RunConfig) -> int:
    suites = ["thomae", "shmaliy", "hahn-transforms"] if cfg.suite == "all" else [cfg.suite]
    result = {"seed": cfg.seed}
    ok = True
    for suite in suites:
        if suite == "thomae":
            data, good = _thomae_suite(cfg.trials or 200, cfg.seed)
            ok &= good
        elif suite == "shmaliy":
            data, good = _shmaliy_suite()
            ok &= good
        elif suite == "hahn-transforms":
            report = run_suite(cfg.trials or 50, cfg.seed)
            data = report.to_json()
            print(report.table(), file=sys.stderr)
        else:
            raise UsageError(f"unknown suite {suite!r}")
        result[suite] = data
    result["ok"] = ok
    _emit(cfg, fileio.dump_json(result))
    return 0 if ok else 1


def cmd_cancel_report(cfg: RunConfig) -> int:
    report = cancellation_report(cfg.m, cfg.N, cfg.omega_grid(), cfg.low_digits, cfg.high_digits)
    _emit(cfg, fileio.dump_json(report.to_json()))
    return 0


COMMANDS = {
    "coeffs": cmd_coeffs,
    "response": cmd_response,
    "filter": cmd_filter,
    "verify": cmd_verify,
    "cancel-report": cmd_cancel_report,
}


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    default_digits = int(os.environ.get(DIGITS_ENV, DEFAULT_DIGITS))
    parser = argparse.ArgumentParser(prog="hahnfir", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p):
        p.add_argument("--family", choices=["shmaliy", "hahn-lp"], default="shmaliy")
        p.add_argument("--m", type=int, default=1, help="Shmaliy polynomial order")
        p.add_argument("--N", type=int, default=8, help="window length")
        p.add_argument("--alpha", type=_rational, default=Fraction(0))
        p.add_argument("--beta", type=_rational, default=Fraction(0))
        p.add_argument("--route", default="hyp_simple",
                       choices=["hankel", "recurrence", "hyp_full", "hyp_simple", "hahn_closed"])

    def grid_args(p):
        p.add_argument("--grid", choices=["log", "linear"], default="log")
        p.add_argument("--wmin", type=float, default=1e-4)
        p.add_argument("--wmax", type=float, default=math.pi)
        p.add_argument("--points", type=int, default=512)

    p = sub.add_parser("coeffs", help="emit filter taps")
    family_args(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output")

    p = sub.add_parser("response", help="frequency response sweep as CSV")
    family_args(p)
    grid_args(p)
    p.add_argument("--digits", type=int, default=default_digits)
    p.add_argument("--output")

    p = sub.add_parser("filter", help="apply a filter to a signal file")
    family_args(p)
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.add_argument("--exact", action="store_true", help="parse samples as exact rationals")

    p = sub.add_parser("verify", help="run exact verification suites")
    p.add_argument("--suite", choices=["thomae", "shmaliy", "hahn-transforms", "all"], default="all")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")

    p = sub.add_parser("cancel-report", help="closed form at two precisions vs the direct sum")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--N", type=int, default=500)
    grid_args(p)
    p.add_argument("--low-digits", dest="low_digits", type=int, default=9)
    p.add_argument("--high-digits", dest="high_digits", type=int, default=50)
    p.add_argument("--output")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(**{k: v for k, v in vars(ns).items() if v is not None})


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = config_from_args(ns)
    try:
        cfg.validate()
        return COMMANDS[cfg.command](cfg)
    except (UsageError, HahnFirError, ValueError) as exc:
        print(f"hahnfir {cfg.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
