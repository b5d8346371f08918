"""Desk-scale evidence for two conjectures on bivincular avoiders.

Reports carry their full tables and never raise when a conjecture fails:
a failing report is the counterexample.
"""

from __future__ import annotations

import logging
from typing import Any

from fishlab.base.config import get_settings, require_within
from fishlab.base.tables import Distribution
from fishlab.base.types import FrozenModel
from fishlab.matrices.enumerate import enumerate_matrices
from fishlab.matrices.extreme import matrix_stats
from fishlab.matrices.transpose import antidiagonal_transpose
from fishlab.permutations.model import (
    avoids_bivincular,
    corner_stats,
    enumerate_avoiders,
)

logger = logging.getLogger(__name__)

PERMUTATION_COLUMNS = ("LRmax", "RLmin", "RLmax", "LRmin")
MATRIX_COLUMNS = ("first_row", "lc", "wne", "diagonal")


class ConjectureReport(FrozenModel):
    """Tables computed for one conjecture at one size."""

    name: str
    n: int
    holds: bool
    tables: dict[str, Distribution]
    details: dict[str, Any] = {}


def conjecture_pat2(n: int) -> ConjectureReport:
    """Is the joint distribution of (LRmax, RLmax) symmetric on avoiders?"""
    table = Distribution.tally(
        ("LRmax", "RLmax"),
        (
            (s.lr_max, s.rl_max)
            for s in map(corner_stats, enumerate_avoiders(n))
        ),
    )
    holds = table.is_symmetric()
    if not holds:
        logger.warning(f"(LRmax, RLmax) is not symmetric at n={n}")
    return ConjectureReport(
        name="pat2", n=n, holds=holds, tables={"LRmax_RLmax": table}
    )


def conjecture_pat1_necessary(n: int) -> ConjectureReport:
    """Necessary conditions for a bijection from avoiders to matrices.

    The bijection would send (LRmax, RLmin, RLmax, LRmin) to (first-row
    weight, last-column weight, wNE-cells, positive diagonal cells), and
    inversion to the antidiagonal transpose. Both multisets must agree,
    avoiders must be closed under inversion, and the two involutions must
    have equally many fixed points.
    """
    require_within("weight", n, get_settings().max_weight)
    avoiders = list(enumerate_avoiders(n))
    perm_table = Distribution.tally(
        PERMUTATION_COLUMNS,
        (
            (s.lr_max, s.rl_min, s.rl_max, s.lr_min)
            for s in map(corner_stats, avoiders)
        ),
    )
    matrices = list(enumerate_matrices(n))
    matrix_table = Distribution.tally(
        MATRIX_COLUMNS,
        (
            (s.first_row, s.lc, s.wne, s.diagonal)
            for s in map(matrix_stats, matrices)
        ),
    )

    not_closed = [p for p in avoiders if not avoids_bivincular(p.inverse())]
    perm_fixed = sum(1 for p in avoiders if p.is_involution())
    matrix_fixed = sum(
        1 for m in matrices if antidiagonal_transpose(m) == m
    )
    perm_counts = perm_table.counts()
    matrix_counts = matrix_table.counts()
    differing = sorted(
        key
        for key in set(perm_counts) | set(matrix_counts)
        if perm_counts[key] != matrix_counts[key]
    )

    holds = not differing and not not_closed and perm_fixed == matrix_fixed
    if not holds:
        logger.warning(f"Necessary conditions fail at n={n}")
    return ConjectureReport(
        name="pat1",
        n=n,
        holds=holds,
        tables={"permutations": perm_table, "matrices": matrix_table},
        details={
            "differing_rows": [list(key) for key in differing],
            "inverse_closed": not not_closed,
            "not_closed_example": str(not_closed[0]) if not_closed else None,
            "fixed_points": {
                "involutions": perm_fixed,
                "self_transpose_matrices": matrix_fixed,
            },
        },
    )

