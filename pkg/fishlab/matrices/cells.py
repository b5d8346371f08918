"""Mutual position of two on-or-above-diagonal cells."""

from __future__ import annotations

from fishlab.base.exceptions import MatrixError
from fishlab.base.types import Cell, CellPosition


class CellBelowDiagonal(MatrixError):
    """A cell argument lies strictly below the main diagonal."""

    def __init__(self, cell: Cell) -> None:
        super().__init__(
            f"Cell {cell} lies below the main diagonal.", {"cell": cell}
        )


WEAKLY_SW = frozenset(
    {CellPosition.south, CellPosition.west, CellPosition.strict_sw}
)
WEAKLY_NE = frozenset(
    {CellPosition.north, CellPosition.east, CellPosition.strict_ne}
)
WEAKLY_NW = frozenset(
    {CellPosition.north, CellPosition.west, CellPosition.strict_nw}
)
WEAKLY_SE = frozenset(
    {CellPosition.south, CellPosition.east, CellPosition.strict_se}
)


def cell_position(c: Cell, d: Cell) -> CellPosition:
    """Position of ``c`` relative to ``d``.

    ``c`` is greater than ``d`` when the column of ``d`` is left of the row
    of ``c``; the remaining incomparable pairs are classified by their row
    and column offsets.
    """
    (ic, jc), (id_, jd) = c, d
    for cell in (c, d):
        if cell[0] > cell[1] or cell[0] < 1:
            raise CellBelowDiagonal(cell)

    if c == d:
        return CellPosition.equal
    if jd < ic:
        return CellPosition.greater
    if jc < id_:
        return CellPosition.smaller
    if jc == jd:
        return CellPosition.north if ic < id_ else CellPosition.south
    if ic == id_:
        return CellPosition.west if jc < jd else CellPosition.east
    if ic > id_:
        return (
            CellPosition.strict_sw if jc < jd else CellPosition.strict_se
        )
    return CellPosition.strict_nw if jc < jd else CellPosition.strict_ne


def comparable(c: Cell, d: Cell) -> bool:
    return cell_position(c, d) in (CellPosition.greater, CellPosition.smaller)


def weakly_sw(c: Cell, d: Cell) -> bool:
    return cell_position(c, d) in WEAKLY_SW


def weakly_ne(c: Cell, d: Cell) -> bool:
    return cell_position(c, d) in WEAKLY_NE


def weakly_nw(c: Cell, d: Cell) -> bool:
    return cell_position(c, d) in WEAKLY_NW


def weakly_se(c: Cell, d: Cell) -> bool:
    return cell_position(c, d) in WEAKLY_SE
