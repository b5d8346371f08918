"""Tests for running the verification suite."""

from __future__ import annotations

import os
from unittest.mock import patch

import pytest

from fishlab.base.exceptions import BoundExceededError
from fishlab.matrices.model import FishburnMatrix, validate
from fishlab.triples.involution import phi
from fishlab.verify.progress import LoggingSuiteProgress
from fishlab.verify.registry import select
from fishlab.verify.report import SuiteParams, VerifyReport
from fishlab.verify.suite import all_passed, run_suite

SMALL = SuiteParams(
    max_weight=4,
    max_dyck_order=5,
    series_degree=4,
    symmetry_degree=5,
    identity_degree=4,
    recurrence_order=1,
    catstat_order=5,
    perm_size=4,
)


class RecordingProgress:
    def __init__(self) -> None:
        self.calls: list[tuple[str, int, int]] = []
        self.closed = False

    def __call__(self, report: VerifyReport, done: int, total: int) -> None:
        self.calls.append((report.name, done, total))

    def close(self) -> None:
        self.closed = True


def broken(m: FishburnMatrix) -> FishburnMatrix:
    """phi, except that every weight-3 matrix goes to [[3]]."""
    if m.weight == 3:
        return validate([[3]])
    return phi(m)


@pytest.mark.slow
def test_small_suite_passes() -> None:
    reports = run_suite(SMALL)

    failures = [(r.name, r.message) for r in reports if not r.passed]
    assert failures == []
    assert all_passed(reports)
    assert [r.name for r in reports] == select(None)


def test_group_reports_carry_parameters() -> None:
    reports = run_suite(SMALL, only=["permutations"])

    assert [r.name for r in reports] == select(["permutations"])
    assert all(r.passed for r in reports)
    assert all(r.parameters["max_weight"] == 4 for r in reports)


def test_conjecture_checks_flag_instead_of_failing() -> None:
    reports = run_suite(SMALL, only=["permutations.pat2"])
    assert reports[0].passed
    assert reports[0].message == "holds for n <= 4"


def test_broken_involution_is_reported() -> None:
    params = SMALL.model_copy(update={"phi": broken})
    reports = run_suite(params, only=["triples.phi"])

    (report,) = reports
    assert not report.passed
    assert report.message == "phi is not an involution at weight 3"
    assert report.counterexample["weight"] == 3
    assert not all_passed(reports)


def test_progress_sees_every_report() -> None:
    progress = RecordingProgress()
    names = select(["series"])

    run_suite(SMALL, only=["series"], progress=progress)

    assert progress.calls == [
        (name, i, len(names)) for i, name in enumerate(names, start=1)
    ]
    assert progress.closed


def test_logging_progress_accepts_reports() -> None:
    progress = LoggingSuiteProgress(log_every_seconds=0)
    report = VerifyReport(name="a.b", parameters={}, passed=True, elapsed=0)
    progress(report, 1, 2)
    progress.close()


def test_parallel_run_keeps_order() -> None:
    only = ["permutations.avoider_counts", "series.fishburn_sums"]
    serial = run_suite(SMALL, only=only)
    parallel = run_suite(SMALL, only=only, jobs=2)
    assert [r.name for r in parallel] == [r.name for r in serial]
    assert [r.passed for r in parallel] == [True, True]


def test_bound_above_settings(fresh_settings) -> None:
    with patch.dict(os.environ, {"FISHLAB_MAX_WEIGHT": "3"}):
        with pytest.raises(BoundExceededError):
            run_suite(SMALL, only=["triples.phi"])


def test_catstat_order_is_bounded(fresh_settings) -> None:
    params = SMALL.model_copy(update={"catstat_order": 11})
    with patch.dict(os.environ, {"FISHLAB_MAX_DYCK_ORDER": "10"}):
        with pytest.raises(BoundExceededError):
            run_suite(params, only=["catalan"])


@pytest.mark.slow
def test_defaults_reach_documented_depth(fresh_settings) -> None:
    reports = run_suite(
        SuiteParams(), only=["series.F_brute", "permutations.pat2"]
    )

    messages = {r.name: r.message for r in reports}
    assert all(r.passed for r in reports)
    assert messages == {
        "series.F_brute": "degree 8",
        "permutations.pat2": "holds for n <= 8",
    }


def test_perm_size_bounds_conjecture_checks() -> None:
    params = SMALL.model_copy(update={"perm_size": 3})
    (report,) = run_suite(params, only=["permutations.pat2"])
    assert report.message == "holds for n <= 3"


def test_series_degree_is_capped_by_settings(fresh_settings) -> None:
    params = SMALL.model_copy(update={"series_degree": 6})
    with patch.dict(os.environ, {"FISHLAB_MAX_WEIGHT": "5"}):
        (report,) = run_suite(params, only=["series.F_brute"])
    assert report.passed
    assert report.message == "degree 5"
