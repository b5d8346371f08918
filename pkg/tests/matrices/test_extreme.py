"""Tests for extreme cells, statistics and chains."""

from __future__ import annotations

import pytest

from fishlab.base.exceptions import MatrixError
from fishlab.base.types import ExtremeKind
from fishlab.matrices.extreme import (
    extreme_cells,
    extreme_weight,
    longest_chain,
    matrix_stats,
    ne,
    stat_names,
    stat_value,
)
from fishlab.matrices.model import identity, validate


def test_sample_matrix(sample_matrix) -> None:
    assert extreme_cells(sample_matrix, ExtremeKind.wne) == {(1, 2), (2, 3)}
    assert extreme_cells(sample_matrix, ExtremeKind.wse) == {(3, 3)}
    assert extreme_weight(sample_matrix, ExtremeKind.sne) == 4
    assert extreme_weight(sample_matrix, ExtremeKind.sse) == 3


def test_second_example() -> None:
    m = validate([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
    assert extreme_cells(m, ExtremeKind.wne) == {(1, 3)}
    assert extreme_cells(m, ExtremeKind.wse) == {(2, 2), (3, 3)}
    assert extreme_weight(m, ExtremeKind.sne) == 3
    assert extreme_weight(m, ExtremeKind.sse) == 4


@pytest.mark.parametrize("kind", list(ExtremeKind))
def test_single_cell_is_every_kind(kind: ExtremeKind) -> None:
    m = validate([[6]])
    assert extreme_cells(m, kind) == {(1, 1)}
    assert extreme_weight(m, kind) == 6


def test_stats_record(sample_matrix) -> None:
    stats = matrix_stats(sample_matrix)
    assert stats.weight == 4
    assert stats.dimension == 3
    assert (stats.lc, stats.pc, stats.first_row) == (2, 2, 2)
    assert stats.diagonal == 2
    assert (stats.wne, stats.wse) == (2, 1)
    assert (stats.sne_weight, stats.sse_weight) == (4, 3)
    assert ne(sample_matrix) == 2


def test_stat_aliases(sample_matrix) -> None:
    stats = matrix_stats(sample_matrix)
    assert stat_value(stats, "ne") == stats.wne
    assert stat_value(stats, "k") == 3
    assert "ne" in stat_names() and "lc" in stat_names()
    with pytest.raises(MatrixError, match="Unknown matrix statistic"):
        stat_value(stats, "height")


class TestChains:
    def test_identity_has_no_long_chain(self) -> None:
        # diagonal cells are pairwise comparable
        assert longest_chain(identity(3), "increasing") == 1
        assert longest_chain(identity(3), "decreasing") == 1

    def test_increasing(self) -> None:
        m = validate([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
        assert longest_chain(m, "increasing") == 2
        assert longest_chain(m, "decreasing") == 1

    def test_decreasing(self, sample_matrix) -> None:
        assert longest_chain(sample_matrix, "decreasing") == 2

    def test_unknown_direction(self) -> None:
        with pytest.raises(MatrixError, match="Unknown chain direction"):
            longest_chain(identity(2), "sideways")
