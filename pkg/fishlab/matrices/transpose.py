"""Transposition of a Fishburn matrix along its North-East diagonal."""

from __future__ import annotations

from fishlab.matrices.model import FishburnMatrix


def antidiagonal_transpose(m: FishburnMatrix) -> FishburnMatrix:
    """Move entry ``(i, j)`` to ``(k + 1 - j, k + 1 - i)``.

    This realises the duality of interval orders: it is an involution,
    exchanges first-row and last-column weight and keeps the main diagonal.
    """
    k = m.k
    return FishburnMatrix(
        rows=tuple(
            tuple(m.rows[k - 1 - j][k - 1 - i] for j in range(k))
            for i in range(k)
        )
    )
