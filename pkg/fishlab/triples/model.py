"""Fishburn triples of type 1 and 2 built from a Fishburn matrix.

Both types keep the interval order ``R`` of the matrix and split the
R-incomparable pairs between ``T`` and ``S`` according to the relative
position of the representing cells. Elements sharing a cell are chained by
creation order: in ``S`` for type 1 and in ``T`` for type 2.
"""

from __future__ import annotations

import logging

from pydantic import model_validator

from fishlab.base.types import Cell, CellPosition, FrozenModel
from fishlab.matrices.cells import WEAKLY_NW, WEAKLY_SW, cell_position
from fishlab.matrices.model import FishburnMatrix
from fishlab.matrices.orders import matrix_to_order
from fishlab.relations.model import Relation, RelStructure, minmax
from fishlab.triples.axioms import (
    AxiomViolation,
    WrongComponentCount,
    check_f_triple,
)

logger = logging.getLogger(__name__)


class FTriple(FrozenModel):
    """A triple ``(T, S, R)`` with the matrix cell of every element."""

    base: RelStructure
    cells: tuple[Cell, ...]

    @model_validator(mode="after")
    def _check_components(self) -> FTriple:
        if self.base.k != 3:
            raise WrongComponentCount(3, self.base.k)
        return self

    @property
    def t(self) -> Relation:
        return self.base.components[0]

    @property
    def s(self) -> Relation:
        return self.base.components[1]

    @property
    def r(self) -> Relation:
        return self.base.components[2]

    def check(self) -> AxiomViolation | None:
        return check_f_triple(self.base)


def _triple(
    m: FishburnMatrix,
    t_positions: frozenset[CellPosition],
    s_positions: frozenset[CellPosition],
    chain_in_t: bool,
) -> FTriple:
    order = matrix_to_order(m)
    cells = order.cells
    n = len(cells)
    t_pairs = []
    s_pairs = []
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            if cells[x] == cells[y]:
                if x < y:
                    (t_pairs if chain_in_t else s_pairs).append((x, y))
                continue
            position = cell_position(cells[x], cells[y])
            if position in t_positions:
                t_pairs.append((x, y))
            elif position in s_positions:
                s_pairs.append((x, y))
    base = RelStructure.of(
        Relation.from_pairs(n, t_pairs),
        Relation.from_pairs(n, s_pairs),
        order.relation,
        names=("T", "S", "R"),
    )
    return FTriple(base=base, cells=cells)


def f1_triple(m: FishburnMatrix) -> FTriple:
    """``T`` from strictly NW pairs, ``S`` from weakly SW pairs."""
    return _triple(
        m,
        frozenset({CellPosition.strict_nw}),
        WEAKLY_SW,
        chain_in_t=False,
    )


def f2_triple(m: FishburnMatrix) -> FTriple:
    """``T`` from weakly NW pairs, ``S`` from strictly SW pairs."""
    return _triple(
        m,
        WEAKLY_NW,
        frozenset({CellPosition.strict_sw}),
        chain_in_t=True,
    )


def trivial_involution(t: FTriple) -> FTriple:
    """``(T, S, R) -> (T^-1, S, R^-1)``.

    Cells follow the antidiagonal transpose of the matrix, so the image of
    an F1-triple of ``M`` carries the cells of the transposed matrix.
    """
    k = max(j for _, j in t.cells)
    base = RelStructure.of(
        t.t.inverse(), t.s, t.r.inverse(), names=t.base.names
    )
    cells = tuple((k + 1 - j, k + 1 - i) for i, j in t.cells)
    return FTriple(base=base, cells=cells)


class TripleStats(FrozenModel):
    """Maximal and minimal element counts of each component."""

    max_s: int
    max_t: int
    max_r: int
    min_s: int
    min_t: int
    min_r: int


def triple_stats(t: FTriple) -> TripleStats:
    counts = {}
    for name, rel in (("t", t.t), ("s", t.s), ("r", t.r)):
        minimal, maximal = minmax(rel)
        counts[f"min_{name}"] = len(minimal)
        counts[f"max_{name}"] = len(maximal)
    return TripleStats(**counts)
