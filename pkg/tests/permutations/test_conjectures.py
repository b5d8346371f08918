"""Tests for the conjecture reports on bivincular avoiders."""

from __future__ import annotations

from fishlab.permutations.conjectures import (
    MATRIX_COLUMNS,
    PERMUTATION_COLUMNS,
    conjecture_pat1_necessary,
    conjecture_pat2,
)

SIZE_THREE = {
    (3, 3, 1, 1): 1,
    (2, 2, 1, 2): 1,
    (2, 1, 2, 2): 1,
    (1, 2, 2, 2): 1,
    (1, 1, 3, 3): 1,
}


def test_pat1_at_three() -> None:
    report = conjecture_pat1_necessary(3)

    assert report.name == "pat1"
    assert report.holds
    perms, matrices = report.tables["permutations"], report.tables["matrices"]
    assert perms.columns == PERMUTATION_COLUMNS
    assert matrices.columns == MATRIX_COLUMNS
    assert dict(perms.counts()) == SIZE_THREE
    assert dict(matrices.counts()) == SIZE_THREE
    assert report.details["inverse_closed"]
    assert report.details["differing_rows"] == []
    assert report.details["fixed_points"] == {
        "involutions": 3,
        "self_transpose_matrices": 3,
    }


def test_pat1_tables_cover_every_object() -> None:
    report = conjecture_pat1_necessary(4)
    assert report.tables["permutations"].total == 15
    assert report.tables["matrices"].total == 15


def test_pat2_at_three() -> None:
    report = conjecture_pat2(3)

    assert report.holds
    table = report.tables["LRmax_RLmax"]
    assert dict(table.counts()) == {
        (3, 1): 1,
        (2, 1): 1,
        (2, 2): 1,
        (1, 2): 1,
        (1, 3): 1,
    }
