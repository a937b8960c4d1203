"""Acceptance checks, one test group per criterion.

Run ``pytest tests/test_acceptance.py`` (or ``python tests/test_acceptance.py``);
the terminal summary prints one PASS/FAIL line per criterion.
"""

import math
import random
import time
from fractions import Fraction

import mpmath
import pytest

from hahnfir.cli import main
from hahnfir.exactnum import MPComplex, relative_error
from hahnfir.hypergeom import THOMAE_FORMS, run_thomae_suite
from hahnfir.identity_suite import catalog, distinct_records, run_suite
from hahnfir.lowpass import (
    dc_gain,
    lowpass_weights,
    lp_transfer_closed,
    lp_transfer_direct,
    lp_transfer_printed,
    unbiasedness_integrals,
)
from hahnfir.shmaliy import (
    all_routes,
    norm_squared_gamma,
    orthogonality_weight,
    printed_h,
    shmaliy_taps,
)
from hahnfir.transfer import cancellation_report, log_grid, transfer_closed, transfer_direct


@pytest.mark.criterion(1, "five-route equivalence of Shmaliy taps (exact)")
def test_criterion_01_five_routes():
    start = time.perf_counter()
    for N in range(4, 17):
        for m in range(min(6, N - 2) + 1):
            vecs = all_routes(m, N)
            ref = vecs["hankel"].taps
            for name, vec in vecs.items():
                assert vec.taps == ref, (name, m, N)
    assert time.perf_counter() - start < 30


@pytest.mark.criterion(2, "taps equal the printed h_0..h_3 for N in 4..12")
@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_criterion_02_printed_formulas(m):
    # both sides are cubic at most in n, so agreement on N >= 4 points is an identity
    mismatches = []
    for N in range(4, 13):
        taps = shmaliy_taps(m, N).taps
        mismatches += [(N, n) for n in range(N) if printed_h(m, n, N) != taps[n]]
    assert not mismatches, f"h_{m} disagrees at (N, n) = {mismatches[:4]} ..."


@pytest.mark.criterion(3, "unit sum, vanishing moments, weighted orthogonality (exact)")
def test_criterion_03_defining_properties():
    for N in range(2, 17):
        orders = range(min(5, N - 1) + 1)
        taps = {m: shmaliy_taps(m, N).taps for m in orders}
        rho = [orthogonality_weight(n, N) for n in range(N)]
        for m in orders:
            h = taps[m]
            assert sum(h) == 1
            for q in range(1, m + 1):
                assert sum(Fraction(n) ** q * h[n] for n in range(N)) == 0
            for q in orders:
                inner = sum(rho[n] * h[n] * taps[q][n] for n in range(N))
                assert inner == (norm_squared_gamma(m, N) if q == m else 0), (m, q, N)
        if N >= 3:
            h1 = taps[1]
            assert sum(rho[n] * h1[n] ** 2 for n in range(N)) == Fraction(2 * (N - 2), N * N * (N + 1))


@pytest.mark.criterion(4, "Thomae transformations A1..A7 on 200 seeded tuples each")
@pytest.mark.parametrize("form", sorted(THOMAE_FORMS))
def test_criterion_04_thomae(form):
    report = run_thomae_suite(form, trials=200, seed=2024)
    assert report.trials == 200
    assert report.holds == 200, report.counterexamples


@pytest.mark.criterion(5, "Hahn transformation catalog: completes, flags misprints, n=0 holds, deterministic")
def test_criterion_05_catalog():
    assert len(distinct_records()) == 31 and len(catalog()) == 32
    report = run_suite(trials_per_record=50, seed=5)
    printed = report.printed
    assert {r.record.id for r in printed} == {r.id for r in catalog()}
    assert all(r.holds + r.fails + r.skips == 50 for r in printed)
    assert report.failing_ids
    for r in report.records:
        assert r.n0_fails == 0 and r.n0_holds > 0, r.record.id
    assert run_suite(trials_per_record=50, seed=5).to_json() == report.to_json()


@pytest.mark.criterion(6, "closed vs direct transfer function at 50 digits within 1e-10")
def test_criterion_06_closed_vs_direct():
    D = 50
    start = time.perf_counter()
    grid = log_grid(1e-4, math.pi, 64)
    worst = mpmath.mpf(0)
    for N in (10, 50, 500):
        for m in (1, 2, 3):
            coeffs = shmaliy_taps(m, N)
            for w in grid:
                z = MPComplex.expj(w, D)
                closed = transfer_closed(m, N, z)
                direct = transfer_direct(m, N, z, coeffs)
                with mpmath.workdps(D):
                    worst = max(worst, relative_error(closed, direct))
    assert worst <= 1e-10, mpmath.nstr(worst, 5)
    assert time.perf_counter() - start < 120


@pytest.mark.criterion(7, "9-digit closed form loses at least 10x against 50 digits at small wT")
def test_criterion_07_cancellation():
    report = cancellation_report(3, 500, log_grid(1e-4, 1e-2, 32), 9, 50)
    assert not any(r.fallback_low or r.fallback_high for r in report.rows)
    assert report.max_rel_err_low >= 10 * report.max_rel_err_high
    assert report.max_rel_err_high < 1e-30


@pytest.mark.criterion(8, "low-pass DC gain and closed/printed forms equal the direct sum (exact)")
def test_criterion_08_lowpass():
    for alpha in range(7):
        for N in range(2, 51):
            assert sum(lowpass_weights(alpha, 0, N).taps) == dc_gain(alpha, N) == Fraction(N, N + alpha + 1)
            assert lp_transfer_closed(alpha, N, 1) == dc_gain(alpha, N)
    for alpha in (0, 1, 2):
        for N in range(2, 11):
            for z in (Fraction(2), Fraction(1, 2), Fraction(-3)):
                direct = lp_transfer_direct(alpha, 0, N, z)
                assert lp_transfer_closed(alpha, N, z, "2f1") == direct
                assert lp_transfer_closed(alpha, N, z, "jacobi") == direct
                assert lp_transfer_printed(alpha, N, z) == direct


@pytest.mark.criterion(9, "trapezoid integrals of H and |H|^2 match 2pi*h[0] and 2pi*sum h^2")
def test_criterion_09_unbiasedness_integrals():
    for alpha in (0, 1, 2, 4):
        for N in range(1, 65):
            report = unbiasedness_integrals(alpha, N, 4096)
            assert report.err1 <= 1e-10 and report.err2 <= 1e-10, (alpha, N)
            assert not report.both_zero
    assert "neither is zero" in unbiasedness_integrals(0, 8, 4096).to_json()["note"]


@pytest.mark.criterion(10, "filter command reproduces degree-m polynomials exactly")
def test_criterion_10_polynomial_reproduction(tmp_path, capsys):
    rng = random.Random(10)
    for m in range(5):
        for N in range(m + 1, 21):
            coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(m + 1)]
            origin = rng.randint(-5, 5)
            xs = range(origin, origin + N + 12)
            values = {x: sum(c * Fraction(x) ** i for i, c in enumerate(coeffs)) for x in xs}
            src = tmp_path / f"poly_{m}_{N}.csv"
            src.write_text("index,value\n" + "".join(f"{x},{v}\n" for x, v in values.items()))
            dst = tmp_path / f"out_{m}_{N}.csv"
            code = main(["filter", "--family", "shmaliy", "--m", str(m), "--N", str(N),
                         "--input", str(src), "--output", str(dst), "--exact"])
            assert code == 0
            rows = [line.split(",") for line in dst.read_text().splitlines()
                    if not line.startswith("#")][1:]
            assert len(rows) == 13
            for idx, val in rows:
                assert Fraction(val) == values[int(idx)], (m, N, idx)
    capsys.readouterr()


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
