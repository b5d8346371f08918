"""Conversion between Fishburn matrices and interval orders."""

from __future__ import annotations

import logging

from fishlab.base.exceptions import MatrixError
from fishlab.base.types import Cell, FrozenModel, PatternId
from fishlab.matrices.model import FishburnMatrix, validate
from fishlab.relations.model import Relation, RelStructure, is_partial_order
from fishlab.relations.patterns import avoids

logger = logging.getLogger(__name__)


class NotIntervalOrder(MatrixError):
    """The input is not a (2+2)-free partial order."""

    pass


class CellOrder(FrozenModel):
    """An interval order together with the cell representing each element."""

    poset: RelStructure
    cells: tuple[Cell, ...]

    @property
    def relation(self) -> Relation:
        return self.poset.components[0]


def element_cells(m: FishburnMatrix) -> tuple[Cell, ...]:
    """One cell per unit of weight, nonzero cells taken in row-major order."""
    return tuple(
        cell for cell in m.nonzero_cells() for _ in range(m.entry(cell))
    )


def matrix_to_order(m: FishburnMatrix) -> CellOrder:
    """The interval order of ``m``: ``x`` is below ``y`` iff the column of
    ``x``'s cell is left of the row of ``y``'s cell."""
    cells = element_cells(m)
    rows = []
    for _, jx in cells:
        row = 0
        for b, (iy, _) in enumerate(cells):
            if jx < iy:
                row |= 1 << b
        rows.append(row)
    relation = Relation(n=len(cells), rows=tuple(rows))
    return CellOrder(poset=RelStructure.of(relation), cells=cells)


def is_interval_order(r: Relation) -> bool:
    return is_partial_order(r) and avoids(
        RelStructure.of(r), PatternId.two_plus_two
    )


def _as_relation(p: RelStructure | Relation) -> Relation:
    if isinstance(p, Relation):
        return p
    if p.k != 1:
        raise NotIntervalOrder(
            f"An order has one component, got {p.k}.", {"components": p.k}
        )
    return p.components[0]


def order_to_matrix(p: RelStructure | Relation) -> FishburnMatrix:
    """The Fishburn matrix of a (2+2)-free poset.

    Distinct strict down-sets form a chain under inclusion and are ranked
    from the smallest; distinct strict up-sets are ranked from the largest.
    An element with down-set rank ``i`` and up-set rank ``j`` adds one to
    cell ``(i, j)``.

    Raises:
        NotIntervalOrder: If ``p`` is not a partial order or contains 2+2.
    """
    r = _as_relation(p)
    if not is_partial_order(r):
        raise NotIntervalOrder("Relation is not a partial order.")
    if not avoids(RelStructure.of(r), PatternId.two_plus_two):
        raise NotIntervalOrder("Partial order contains 2+2.")
    if r.n == 0:
        raise NotIntervalOrder("The empty order has no Fishburn matrix.")

    down = [r.column(x) for x in range(r.n)]
    up = list(r.rows)
    down_rank = {
        d: i for i, d in enumerate(sorted(set(down), key=int.bit_count))
    }
    up_rank = {
        u: j
        for j, u in enumerate(
            sorted(set(up), key=int.bit_count, reverse=True)
        )
    }
    k = len(down_rank)
    if len(up_rank) != k:
        raise NotIntervalOrder(
            "Down-sets and up-sets have different numbers of classes."
        )
    entries = [[0] * k for _ in range(k)]
    for x in range(r.n):
        entries[down_rank[down[x]]][up_rank[up[x]]] += 1
    logger.debug(f"Interval order on {r.n} elements has magnitude {k}")
    return validate(entries)
