"""Tests for Fishburn matrix validation and cell positions."""

from __future__ import annotations

import pytest

from fishlab.base.exceptions import MatrixError
from fishlab.base.types import CellPosition
from fishlab.matrices.cells import (
    CellBelowDiagonal,
    cell_position,
    comparable,
    weakly_ne,
    weakly_nw,
    weakly_se,
    weakly_sw,
)
from fishlab.matrices.model import (
    NotUpperTriangular,
    ZeroColumn,
    ZeroRow,
    identity,
    validate,
)


class TestValidate:
    def test_single_cell(self) -> None:
        m = validate([[1]])
        assert (m.k, m.weight, m.lc) == (1, 1, 1)

    def test_weights(self) -> None:
        m = validate([[1, 1], [0, 1]])
        assert (m.weight, m.lc, m.pc) == (3, 2, 1)
        assert m.row_weights() == (2, 1)
        assert m.column_weights() == (1, 2)

    def test_zero_row(self) -> None:
        with pytest.raises(ZeroRow) as info:
            validate([[0, 1], [0, 0]])
        assert info.value.i == 2

    def test_zero_column(self) -> None:
        with pytest.raises(ZeroColumn, match="Column 1"):
            validate([[0, 1], [0, 1]])

    def test_below_diagonal(self) -> None:
        with pytest.raises(NotUpperTriangular) as info:
            validate([[1, 0], [1, 1]])
        assert info.value.cell == (2, 1)

    @pytest.mark.parametrize(
        "entries", [[], [[1, 1]], [[1, -1], [0, 1]]]
    )
    def test_malformed(self, entries) -> None:
        with pytest.raises(MatrixError):
            validate(entries)

    def test_primitive_and_support(self) -> None:
        m = validate([[2, 1], [0, 3]])
        assert not m.is_primitive()
        assert m.support() == validate([[1, 1], [0, 1]])
        assert identity(3).is_primitive()
        assert identity(3).diagonal_positive == 3

    def test_value_semantics(self) -> None:
        assert validate([[1, 1], [0, 1]]) == validate(((1, 1), (0, 1)))
        assert len({validate([[1]]), validate([[1]])}) == 1


class TestCellPosition:
    @pytest.mark.parametrize(
        "c, d, expected",
        [
            ((3, 3), (1, 2), CellPosition.greater),
            ((1, 2), (3, 3), CellPosition.smaller),
            ((2, 2), (1, 3), CellPosition.strict_sw),
            ((1, 3), (2, 2), CellPosition.strict_ne),
            ((1, 2), (2, 3), CellPosition.strict_nw),
            ((2, 3), (1, 2), CellPosition.strict_se),
            ((1, 3), (2, 3), CellPosition.north),
            ((2, 3), (1, 3), CellPosition.south),
            ((1, 1), (1, 2), CellPosition.west),
            ((1, 2), (1, 1), CellPosition.east),
            ((2, 2), (2, 2), CellPosition.equal),
        ],
    )
    def test_positions(self, c, d, expected) -> None:
        assert cell_position(c, d) == expected

    def test_positions_are_mutual(self) -> None:
        opposite = {
            CellPosition.greater: CellPosition.smaller,
            CellPosition.north: CellPosition.south,
            CellPosition.west: CellPosition.east,
            CellPosition.strict_ne: CellPosition.strict_sw,
            CellPosition.strict_nw: CellPosition.strict_se,
            CellPosition.equal: CellPosition.equal,
        }
        opposite.update({b: a for a, b in opposite.items()})
        cells = [(i, j) for j in range(1, 5) for i in range(1, j + 1)]
        for c in cells:
            for d in cells:
                assert cell_position(d, c) == opposite[cell_position(c, d)]
                assert comparable(c, d) == comparable(d, c)

    def test_weakly_sw(self) -> None:
        assert weakly_sw((2, 2), (1, 2))
        assert weakly_sw((1, 1), (1, 2))
        assert not weakly_sw((1, 3), (2, 2))

    def test_weakly_ne_nw_se(self) -> None:
        assert weakly_ne((1, 2), (2, 2))
        assert weakly_ne((1, 3), (2, 2))
        assert not weakly_ne((2, 2), (1, 3))
        assert weakly_nw((1, 2), (2, 3))
        assert weakly_nw((1, 1), (1, 2))
        assert not weakly_nw((1, 3), (2, 2))
        assert weakly_se((2, 3), (1, 2))
        assert weakly_se((1, 3), (1, 2))
        assert not weakly_se((1, 2), (2, 3))

    def test_below_diagonal_cell(self) -> None:
        with pytest.raises(CellBelowDiagonal):
            cell_position((2, 1), (1, 1))
