"""Fishburn matrices: upper-triangular fillings with no empty row or column.

Rows and columns are 1-indexed in every public API, with row 1 on top.
"""

from __future__ import annotations

from collections.abc import Sequence

from pydantic import model_validator

from fishlab.base.exceptions import MatrixError
from fishlab.base.types import Cell, FrozenModel


class NotUpperTriangular(MatrixError):
    """A nonzero entry lies below the main diagonal."""

    def __init__(self, cell: Cell) -> None:
        super().__init__(
            f"Entry at {cell} lies below the main diagonal.", {"cell": cell}
        )
        self.cell = cell


class ZeroRow(MatrixError):
    """A row has weight zero."""

    def __init__(self, i: int) -> None:
        super().__init__(f"Row {i} has zero weight.", {"row": i})
        self.i = i


class ZeroColumn(MatrixError):
    """A column has weight zero."""

    def __init__(self, j: int) -> None:
        super().__init__(f"Column {j} has zero weight.", {"column": j})
        self.j = j


class FishburnMatrix(FrozenModel):
    """A square, upper-triangular, nonnegative integer matrix whose rows and
    columns all have positive weight."""

    rows: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_fishburn(self) -> FishburnMatrix:
        k = len(self.rows)
        if k == 0:
            raise MatrixError("A Fishburn matrix has at least one row.")
        for i, row in enumerate(self.rows):
            if len(row) != k:
                raise MatrixError(
                    f"Row {i + 1} has {len(row)} entries, expected {k}.",
                    {"row": i + 1},
                )
            for j, value in enumerate(row):
                if value < 0:
                    raise MatrixError(
                        f"Negative entry at {(i + 1, j + 1)}.",
                        {"cell": (i + 1, j + 1)},
                    )
                if value and j < i:
                    raise NotUpperTriangular((i + 1, j + 1))
        for i, row in enumerate(self.rows):
            if not any(row):
                raise ZeroRow(i + 1)
        for j in range(k):
            if not any(row[j] for row in self.rows):
                raise ZeroColumn(j + 1)
        return self

    @property
    def k(self) -> int:
        """Dimension."""
        return len(self.rows)

    def entry(self, cell: Cell) -> int:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def nonzero_cells(self) -> list[Cell]:
        """Nonzero cells in row-major order."""
        return [
            (i + 1, j + 1)
            for i, row in enumerate(self.rows)
            for j, value in enumerate(row)
            if value
        ]

    def column_cells(self, j: int) -> list[Cell]:
        """Nonzero cells of column ``j``, top to bottom."""
        return [(i, j) for i in range(1, j + 1) if self.rows[i - 1][j - 1]]

    def row_weights(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def column_weights(self) -> tuple[int, ...]:
        return tuple(
            sum(row[j] for row in self.rows) for j in range(self.k)
        )

    @property
    def weight(self) -> int:
        return sum(self.row_weights())

    @property
    def lc(self) -> int:
        """Weight of the last column."""
        return self.column_weights()[-1]

    @property
    def pc(self) -> int:
        """Total weight of the columns preceding the last one."""
        return self.weight - self.lc

    @property
    def first_row_weight(self) -> int:
        return sum(self.rows[0])

    @property
    def diagonal_positive(self) -> int:
        """Number of positive cells on the main diagonal."""
        return sum(1 for i in range(self.k) if self.rows[i][i])

    def is_primitive(self) -> bool:
        """True iff every entry is 0 or 1."""
        return all(value <= 1 for row in self.rows for value in row)

    def support(self) -> FishburnMatrix:
        """The primitive matrix with a 1 wherever this matrix is nonzero."""
        return FishburnMatrix(
            rows=tuple(
                tuple(1 if value else 0 for value in row) for row in self.rows
            )
        )

    def __str__(self) -> str:
        width = max(len(str(v)) for row in self.rows for v in row)
        return "\n".join(
            " ".join(str(v).rjust(width) for v in row) for row in self.rows
        )


def validate(entries: Sequence[Sequence[int]]) -> FishburnMatrix:
    """Build a Fishburn matrix, raising the first violated condition.

    Raises:
        NotUpperTriangular: If a nonzero entry lies below the diagonal.
        ZeroRow: If a row has zero weight (topmost first).
        ZeroColumn: If a column has zero weight (leftmost first).
        MatrixError: If the array is not square or has negative entries.
    """
    return FishburnMatrix(rows=tuple(tuple(row) for row in entries))


def identity(k: int) -> FishburnMatrix:
    return FishburnMatrix(
        rows=tuple(
            tuple(1 if i == j else 0 for j in range(k)) for i in range(k)
        )
    )
