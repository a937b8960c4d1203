from fractions import Fraction

import pytest

from hahnfir.identity_suite import (
    ANNOUNCED_COUNT,
    CONJECTURES,
    IDENTIFICATION_RECORD_ID,
    catalog,
    distinct_records,
    duplicate_ids,
    identification_chain,
    run_suite,
    sample_tuples,
    verify_transform,
)


@pytest.fixture(scope="module")
def report():
    return run_suite(trials_per_record=50, seed=0)


def test_catalog_counts():
    recs = catalog()
    assert len(recs) == ANNOUNCED_COUNT == 32
    assert [r.id for r in recs] == list(range(1, 33))
    assert len(distinct_records()) == 31
    assert duplicate_ids() == [(6, 7)]


def test_first_record():
    rec = catalog()[0]
    assert rec.prefactor == "1"
    assert rec.target == ("-n-alpha-beta-1", "alpha", "-x-alpha-1-n", "N")


def test_identification_record_present():
    rec = catalog()[IDENTIFICATION_RECORD_ID - 1]
    assert rec.target == ("x-N-beta", "beta", "alpha", "-N-alpha-beta-2")
    assert "poch(-n-beta, n)" in rec.prefactor and "poch(-N, n)" in rec.prefactor


def test_identification_record_fails_at_degree_one_and_shift_holds():
    printed = catalog()[IDENTIFICATION_RECORD_ID - 1]
    shifted = CONJECTURES[0]
    for Np in range(3, 8):
        for npos in range(Np):
            args = (1, -1 - npos, 1, 0, -1 - Np)
            assert not verify_transform(printed, *args).holds
            assert verify_transform(shifted, *args).holds


def test_degree_zero_holds_everywhere():
    for rec in catalog():
        check = verify_transform(rec, 0, 3, Fraction(1, 2), 2, 6)
        assert check.skipped is None and check.holds, rec.id


def test_record_evaluation_is_sandboxed():
    rec = catalog()[0]
    with pytest.raises(NameError):
        eval("open", rec._env(0, 0, 0, 0, 0))


def test_sample_tuples_bounds():
    tuples = sample_tuples(200, seed=5)
    assert all(0 <= t[0] <= 4 and all(-8 <= v <= 8 for v in t[1:]) for t in tuples)


def test_suite_flags_misprints(report):
    assert report.failing_ids
    assert IDENTIFICATION_RECORD_ID in report.failing_ids
    assert all(r.n0_fails == 0 for r in report.records)


def test_suite_counts_add_up(report):
    for r in report.records:
        assert r.holds + r.fails + r.skips == 50


def test_conjecture_holds(report):
    (conj,) = [r for r in report.records if r.record.kind == "conjecture"]
    assert conj.fails == 0 and conj.holds > 0


def test_suite_deterministic(report):
    assert run_suite(50, seed=0).to_json() == report.to_json()


def test_suite_json(report):
    data = report.to_json()
    assert data["printed_count"] == 32 and data["distinct_printed"] == 31
    assert data["duplicates"] == [[6, 7]]
    assert len(data["records"]) == 33
    first_failure = next(r for r in data["records"] if r["fails"])
    assert set(first_failure["first_counterexample"]) == {"n", "x", "alpha", "beta", "N", "lhs", "rhs"}


def test_suite_table_lists_every_record(report):
    table = report.table().splitlines()
    assert len([line for line in table if "identification" not in line]) == 1 + 33


def test_suite_minimum_trials():
    with pytest.raises(ValueError):
        run_suite(5)


def test_identification_chain():
    status = {item["name"]: item["holds"] for item in identification_chain()}
    assert status == {
        "hahn_intermediate": True,
        "record4_printed_argument": False,
        "record4_shifted_argument": True,
        "final_printed": False,
        "final_printed_prefactor_shifted_argument": False,
        "final_resimplified_shifted_argument": True,
    }
