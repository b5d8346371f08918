"""Extreme cells and the statistics record of a Fishburn matrix.

A nonzero cell is sNE-extreme if every other cell strictly NE of it is zero,
and wNE-extreme if every other cell weakly NE of it is zero. Every wNE-cell
is an sNE-cell. The SE kinds are defined the same way.
"""

from __future__ import annotations

from pydantic import Field

from fishlab.base.exceptions import MatrixError
from fishlab.base.types import Cell, CellPosition, ExtremeKind, FrozenModel
from fishlab.matrices.cells import WEAKLY_NE, WEAKLY_SE, cell_position
from fishlab.matrices.model import FishburnMatrix

_REGIONS: dict[ExtremeKind, frozenset[CellPosition]] = {
    ExtremeKind.sne: frozenset({CellPosition.strict_ne}),
    ExtremeKind.wne: WEAKLY_NE,
    ExtremeKind.sse: frozenset({CellPosition.strict_se}),
    ExtremeKind.wse: WEAKLY_SE,
}


def extreme_cells(m: FishburnMatrix, kind: ExtremeKind) -> frozenset[Cell]:
    """Nonzero cells with no other nonzero cell in their ``kind`` region."""
    region = _REGIONS[kind]
    cells = m.nonzero_cells()
    return frozenset(
        c
        for c in cells
        if not any(d != c and cell_position(d, c) in region for d in cells)
    )


def extreme_weight(m: FishburnMatrix, kind: ExtremeKind) -> int:
    return sum(m.entry(c) for c in extreme_cells(m, kind))


def ne(m: FishburnMatrix) -> int:
    """Number of wNE-cells."""
    return len(extreme_cells(m, ExtremeKind.wne))


class MatrixStats(FrozenModel):
    """Statistics of one Fishburn matrix."""

    weight: int
    dimension: int
    lc: int
    pc: int
    first_row: int = Field(description="Weight of the first row.")
    diagonal: int = Field(description="Positive cells on the diagonal.")
    wne: int = Field(description="Number of wNE-cells.")
    wse: int
    sne: int
    sse: int
    wne_weight: int
    wse_weight: int
    sne_weight: int = Field(description="Total weight of the sNE-cells.")
    sse_weight: int


def matrix_stats(m: FishburnMatrix) -> MatrixStats:
    cells = {kind: extreme_cells(m, kind) for kind in ExtremeKind}

    def weight_of(kind: ExtremeKind) -> int:
        return sum(m.entry(c) for c in cells[kind])

    return MatrixStats(
        weight=m.weight,
        dimension=m.k,
        lc=m.lc,
        pc=m.pc,
        first_row=m.first_row_weight,
        diagonal=m.diagonal_positive,
        wne=len(cells[ExtremeKind.wne]),
        wse=len(cells[ExtremeKind.wse]),
        sne=len(cells[ExtremeKind.sne]),
        sse=len(cells[ExtremeKind.sse]),
        wne_weight=weight_of(ExtremeKind.wne),
        wse_weight=weight_of(ExtremeKind.wse),
        sne_weight=weight_of(ExtremeKind.sne),
        sse_weight=weight_of(ExtremeKind.sse),
    )


def _longest_run(cells: list[Cell], step: CellPosition) -> int:
    best: dict[Cell, int] = {}
    for c in cells:
        best[c] = 1 + max(
            (best[d] for d in best if cell_position(c, d) == step),
            default=0,
        )
    return max(best.values(), default=0)


def longest_chain(m: FishburnMatrix, direction: str) -> int:
    """Length of the longest increasing or decreasing chain of nonzero cells.

    In an increasing chain every cell is strictly NE of all earlier cells,
    in a decreasing chain strictly SE of them.
    """
    cells = sorted(m.nonzero_cells(), key=lambda c: (c[1], c[0]))
    if direction == "increasing":
        return _longest_run(cells, CellPosition.strict_ne)
    if direction != "decreasing":
        raise MatrixError(f"Unknown chain direction '{direction}'.")
    # strictly SE is not transitive: every cell must also stay
    # incomparable to the first one
    return max(
        _longest_run(
            [
                c
                for c in cells
                if c == first
                or cell_position(c, first) == CellPosition.strict_se
            ],
            CellPosition.strict_se,
        )
        for first in cells
    )


STAT_ALIASES = {"ne": "wne", "w": "weight", "k": "dimension"}


def stat_names() -> list[str]:
    return sorted(set(MatrixStats.model_fields) | set(STAT_ALIASES))


def stat_value(stats: MatrixStats, name: str) -> int:
    """Look up a statistic by field name or short alias such as ``ne``."""
    field = STAT_ALIASES.get(name, name)
    if field not in MatrixStats.model_fields:
        raise MatrixError(
            f"Unknown matrix statistic '{name}'.",
            {"known": stat_names()},
        )
    return int(getattr(stats, field))
