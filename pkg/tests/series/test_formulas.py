"""Closed forms against matrices counted one by one."""

from __future__ import annotations

import os
from unittest.mock import patch

import pytest

from fishlab.base.exceptions import BoundExceededError, SeriesError
from fishlab.series.brute import P_brute, P_k_brute, brute_series
from fishlab.series.checks import (
    F_symmetry,
    G_agreement,
    P_checks,
    fishburn_numbers,
    recurrence_check,
)
from fishlab.series.formulas import F_formula, G_formula, P_formula
from fishlab.series.model import X_GRADING

FISHBURN = [1, 2, 5, 15, 53]


def test_F_counts_fishburn_matrices() -> None:
    assert fishburn_numbers(F_formula(5)) == FISHBURN


def test_F_matches_enumeration() -> None:
    assert F_formula(5) == brute_series(5)


def test_brute_series_leading_terms() -> None:
    series = brute_series(2)
    assert series.coefficient((1, 1, 1)) == 1
    assert series.coefficient((2, 2, 1)) == 1
    assert series.coefficient((2, 1, 2)) == 1


def test_brute_series_other_statistics() -> None:
    series = brute_series(3, stats=("k", "diagonal"))
    assert fishburn_numbers(series) == FISHBURN[:3]
    assert series.coefficient((3, 3, 3)) == 1


def test_brute_series_needs_two_statistics() -> None:
    with pytest.raises(SeriesError):
        brute_series(3, stats=("lc",))


def test_brute_series_bound(fresh_settings) -> None:
    with patch.dict(os.environ, {"FISHLAB_MAX_WEIGHT": "3"}):
        with pytest.raises(BoundExceededError):
            brute_series(4)


def test_F_symmetry() -> None:
    assert F_symmetry(6).passed


@pytest.mark.parametrize("which", [1, 2, 3])
def test_G_formulas_agree(which: int) -> None:
    reference = F_formula(6, X_GRADING).specialize("z", 1)
    assert G_formula(6, which) == reference


def test_G_agreement_reports() -> None:
    reports = G_agreement(4)
    assert [r.passed for r in reports] == [True, True, True]
    assert all(r.degree == 4 for r in reports)


@pytest.mark.parametrize("which", [1, 2, 3])
def test_G_sums_are_fishburn_numbers(which: int) -> None:
    assert fishburn_numbers(G_formula(5, which)) == FISHBURN


def test_G_first_formula_weight_three() -> None:
    G = G_formula(3, 1)
    assert G.coefficient((3, 1, 0)) == 2
    assert G.coefficient((3, 2, 0)) == 2
    assert G.coefficient((3, 3, 0)) == 1


def test_unknown_G_formula() -> None:
    with pytest.raises(SeriesError):
        G_formula(3, 4)


def test_P_closed_form() -> None:
    assert P_formula(5) == P_brute(5)


def test_P_checks() -> None:
    reports = P_checks(5)
    assert len(reports) == 3
    assert all(r.passed for r in reports), [r.mismatches for r in reports]


def test_primitive_polynomials() -> None:
    assert P_k_brute(1).terms == {(0, 0, 1): 1}
    assert sum(P_k_brute(2).terms.values()) == 2
    assert sum(P_k_brute(3).terms.values()) == 10


@pytest.mark.parametrize("k", [1, 2])
def test_recurrence(k: int) -> None:
    assert recurrence_check(k).passed


def test_degree_must_be_positive() -> None:
    with pytest.raises(SeriesError):
        F_formula(0)
