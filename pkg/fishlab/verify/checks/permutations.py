"""Checks and conjecture reports on bivincular avoiders."""

from __future__ import annotations

from fishlab.base.config import get_settings
from fishlab.permutations.conjectures import (
    ConjectureReport,
    conjecture_pat1_necessary,
    conjecture_pat2,
)
from fishlab.permutations.model import (
    corner_stats,
    enumerate_avoiders,
    enumerate_permutations,
)
from fishlab.verify.registry import check
from fishlab.verify.report import (
    FISHBURN_NUMBERS,
    Outcome,
    SuiteParams,
    fail,
    flag,
    ok,
)


def _largest(params: SuiteParams) -> int:
    settings = get_settings()
    return min(params.perm_size, settings.max_perm_size, settings.max_weight)


@check("permutations.avoider_counts")
def avoider_counts(params: SuiteParams) -> Outcome:
    for n in range(1, _largest(params) + 1):
        count = sum(1 for _ in enumerate_avoiders(n))
        if count != FISHBURN_NUMBERS[n - 1]:
            return fail(f"{count} avoiders of size {n}", {"n": n})
    return ok()


@check("permutations.inverse_corners")
def inverse_corners(params: SuiteParams) -> Outcome:
    """Inversion keeps LRmin and RLmax and exchanges LRmax with RLmin."""
    for n in range(1, min(_largest(params), 7) + 1):
        for p in enumerate_permutations(n):
            a, b = corner_stats(p), corner_stats(p.inverse())
            if (a.lr_min, a.rl_max, a.lr_max, a.rl_min) != (
                b.lr_min,
                b.rl_max,
                b.rl_min,
                b.lr_max,
            ):
                return fail("Corner statistics of the inverse", str(p))
    return ok()


def _report_outcome(reports: list[ConjectureReport]) -> Outcome:
    for report in reports:
        if not report.holds:
            return flag(
                f"{report.name} fails at n={report.n}", report.details
            )
    return ok(f"holds for n <= {reports[-1].n}" if reports else "")


@check("permutations.pat2")
def pat2(params: SuiteParams) -> Outcome:
    """Only flagged: this is a conjecture."""
    return _report_outcome(
        [conjecture_pat2(n) for n in range(1, _largest(params) + 1)]
    )


@check("permutations.pat1")
def pat1(params: SuiteParams) -> Outcome:
    """Only flagged: this is a conjecture."""
    return _report_outcome(
        [
            conjecture_pat1_necessary(n)
            for n in range(1, _largest(params) + 1)
        ]
    )
