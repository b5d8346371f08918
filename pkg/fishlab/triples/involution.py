"""The involution phi on Fishburn matrices.

``phi`` rebuilds the primitive support of a matrix from ``[1]`` with every
extension code reversed, then inflates each column of the result with the
values of the same column of the input, read bottom to top. It preserves
weight, dimension and every column weight, and exchanges the NE and SE
extreme-cell statistics:

* the number of wNE-cells of ``m`` is the number of wSE-cells of ``phi(m)``,
* the weight of the sNE-cells of ``m`` is the weight of the sSE-cells of
  ``phi(m)``.
"""

from __future__ import annotations

import logging
from collections.abc import Callable

from fishlab.base.exceptions import MatrixError
from fishlab.base.types import Cell, FrozenModel
from fishlab.matrices.enumerate import enumerate_matrices
from fishlab.matrices.extension import build, code_sequence, deflate, inflate
from fishlab.matrices.extreme import MatrixStats, matrix_stats
from fishlab.matrices.model import FishburnMatrix

logger = logging.getLogger(__name__)

MatrixMap = Callable[[FishburnMatrix], FishburnMatrix]


def phi(m: FishburnMatrix) -> FishburnMatrix:
    support, values = deflate(m)
    mirrored = build([code.reversed() for code in code_sequence(support)])

    image: dict[Cell, int] = {}
    for j in range(1, m.k + 1):
        source = support.column_cells(j)
        target = mirrored.column_cells(j)
        if len(source) != len(target):
            raise MatrixError(
                f"Column {j} changed weight under code reversal.",
                {"column": j},
            )
        column_values = [values[c] for c in source]
        image.update(zip(target, reversed(column_values)))
    return inflate(mirrored, image)


class PhiImage(FrozenModel):
    """A matrix, its image under phi and the statistics of both."""

    source: FishburnMatrix
    image: FishburnMatrix
    source_stats: MatrixStats
    image_stats: MatrixStats

    @property
    def statistics_exchanged(self) -> bool:
        """True iff the image carries the statistics phi promises."""
        a, b = self.source_stats, self.image_stats
        return (
            a.wne == b.wse
            and a.wse == b.wne
            and a.sne_weight == b.sse_weight
            and a.sse_weight == b.sne_weight
            and a.lc == b.lc
            and self.source.column_weights() == self.image.column_weights()
        )


def phi_stats(m: FishburnMatrix, mapping: MatrixMap = phi) -> PhiImage:
    image = mapping(m)
    return PhiImage(
        source=m,
        image=image,
        source_stats=matrix_stats(m),
        image_stats=matrix_stats(image),
    )


def phi_fixed_points(weight: int, mapping: MatrixMap = phi) -> int:
    """Number of weight-``weight`` matrices fixed by ``mapping``."""
    count = sum(1 for m in enumerate_matrices(weight) if mapping(m) == m)
    logger.debug(f"phi fixes {count} matrices of weight {weight}")
    return count
