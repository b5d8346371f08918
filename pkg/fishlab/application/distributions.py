"""Joint statistic tables over matrices, Dyck paths and avoiders."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator, Sequence

from fishlab.base.config import get_settings, require_within
from fishlab.base.tables import Distribution, ensure_columns
from fishlab.base.types import Avoidance, ObjectKind
from fishlab.catalan.dyck import DyckStats, dyck_stats, enumerate_dyck
from fishlab.matrices.enumerate import enumerate_matrices
from fishlab.matrices.extreme import matrix_stats, stat_names, stat_value
from fishlab.permutations.model import corner_stats, enumerate_avoiders

logger = logging.getLogger(__name__)

PERMUTATION_STATS = {
    "LRmax": "lr_max",
    "LRmin": "lr_min",
    "RLmax": "rl_max",
    "RLmin": "rl_min",
}

Row = tuple[int, ...]


def _matrix_rows(
    n: int, stats: Sequence[str], primitive: bool, avoid: Avoidance
) -> Iterator[Row]:
    ensure_columns(stats, stat_names())
    require_within("weight", n, get_settings().max_weight)
    for m in enumerate_matrices(n, primitive_only=primitive, avoid=avoid):
        record = matrix_stats(m)
        yield tuple(stat_value(record, name) for name in stats)


def _dyck_rows(n: int, stats: Sequence[str]) -> Iterator[Row]:
    ensure_columns(stats, list(DyckStats.model_fields))
    require_within("dyck order", n, get_settings().max_dyck_order)
    for p in enumerate_dyck(n):
        record = dyck_stats(p)
        yield tuple(getattr(record, name) for name in stats)


def _permutation_rows(n: int, stats: Sequence[str]) -> Iterator[Row]:
    ensure_columns(stats, list(PERMUTATION_STATS))
    for p in enumerate_avoiders(n):
        record = corner_stats(p)
        yield tuple(
            getattr(record, PERMUTATION_STATS[name]) for name in stats
        )


def stat_choices(kind: ObjectKind) -> list[str]:
    choices: dict[ObjectKind, Callable[[], list[str]]] = {
        ObjectKind.matrices: stat_names,
        ObjectKind.dyck: lambda: list(DyckStats.model_fields),
        ObjectKind.perms: lambda: list(PERMUTATION_STATS),
    }
    return choices[kind]()


def distribution_table(
    kind: ObjectKind,
    n: int,
    stats: Sequence[str],
    primitive: bool = False,
    avoid: Avoidance = Avoidance.none,
) -> Distribution:
    """Count the objects of size ``n`` per tuple of statistic values.

    Matrices are taken by weight and may be restricted to primitive or
    NW-/SW-free ones; ``perms`` are the bivincular avoiders of size ``n``.
    With no statistics the table has a single row holding the count.

    Raises:
        FishlabError: If a statistic is unknown for ``kind``.
        BoundExceededError: If ``n`` exceeds the configured bound.
    """
    restricted = primitive or avoid is not Avoidance.none
    if kind is not ObjectKind.matrices and restricted:
        logger.warning("Primitive and avoidance filters apply to matrices")
    if kind is ObjectKind.matrices:
        rows = _matrix_rows(n, stats, primitive, avoid)
    elif kind is ObjectKind.dyck:
        rows = _dyck_rows(n, stats)
    else:
        rows = _permutation_rows(n, stats)
    table = Distribution.tally(stats, rows)
    logger.debug(f"Tabulated {table.total} {kind.value} of size {n}")
    return table
