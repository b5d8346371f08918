"""Checks on the generating functions."""

from __future__ import annotations

from fishlab.base.config import get_settings
from fishlab.matrices.enumerate import enumerate_matrices
from fishlab.series.brute import brute_series
from fishlab.series.checks import (
    F_symmetry,
    G_agreement,
    P_checks,
    SeriesCheck,
    compare,
    fishburn_numbers,
    recurrence_check,
)
from fishlab.series.formulas import F_formula
from fishlab.series.model import X_GRADING
from fishlab.verify.registry import check
from fishlab.verify.report import (
    FISHBURN_NUMBERS,
    Outcome,
    SuiteParams,
    fail,
    ok,
)


def _outcome(reports: list[SeriesCheck]) -> Outcome:
    for report in reports:
        if not report.passed:
            return fail(report.name, report.mismatches)
    return ok()


@check("series.F_brute")
def F_brute(params: SuiteParams) -> Outcome:
    N = min(params.series_degree, get_settings().max_weight)
    outcome = _outcome(
        [compare("F formula equals the sum", F_formula(N), brute_series(N))]
    )
    return ok(f"degree {N}") if outcome.passed else outcome


@check("series.fishburn_sums")
def fishburn_sums(params: SuiteParams) -> Outcome:
    N = params.series_degree
    sums = fishburn_numbers(F_formula(N))
    if sums != list(FISHBURN_NUMBERS[:N]):
        return fail("Coefficient sums are not the Fishburn numbers", sums)
    return ok()


@check("series.F_symmetry")
def F_symmetric(params: SuiteParams) -> Outcome:
    return _outcome([F_symmetry(params.symmetry_degree)])


@check("series.G_agreement")
def G_forms(params: SuiteParams) -> Outcome:
    return _outcome(G_agreement(params.series_degree))


@check("series.single_last_column")
def single_last_column(params: SuiteParams) -> Outcome:
    """[x^n y] of F(x, y, 1) counts matrices whose last column is one 1."""
    N = min(params.series_degree, params.max_weight)
    G = F_formula(N, X_GRADING).specialize("z", 1)
    for n in range(1, N + 1):
        count = sum(1 for m in enumerate_matrices(n) if m.lc == 1)
        if G.coefficient((n, 1, 0)) != count:
            return fail(
                f"[x^{n} y] is {G.coefficient((n, 1, 0))}, expected {count}"
            )
    return ok()


@check("series.P_identities")
def P_identities(params: SuiteParams) -> Outcome:
    return _outcome(P_checks(params.identity_degree))


@check("series.recurrence")
def recurrence(params: SuiteParams) -> Outcome:
    return _outcome(
        [recurrence_check(k) for k in range(1, params.recurrence_order + 1)]
    )
