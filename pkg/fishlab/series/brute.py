"""Generating functions summed directly over enumerated matrices."""

from __future__ import annotations

import logging
from collections.abc import Sequence

from fishlab.base.config import get_settings, require_within
from fishlab.base.exceptions import SeriesError
from fishlab.matrices.enumerate import (
    enumerate_matrices,
    enumerate_primitive,
    primitive_up_to,
)
from fishlab.matrices.extreme import matrix_stats, ne, stat_value
from fishlab.matrices.model import FishburnMatrix
from fishlab.series.model import (
    TOTAL_GRADING,
    X_GRADING,
    Exponents,
    Grading,
    TruncatedSeries,
)

logger = logging.getLogger(__name__)


def brute_series(
    N: int,
    stats: Sequence[str] = ("lc", "ne"),
    weights: Grading = X_GRADING,
) -> TruncatedSeries:
    """``sum x^w(M) y^s1(M) z^s2(M)`` over all matrices of weight ``<= N``.

    Raises:
        BoundExceededError: If ``N`` is above ``FISHLAB_MAX_WEIGHT``.
    """
    require_within("weight", N, get_settings().max_weight)
    if len(stats) != 2:
        raise SeriesError(
            f"Give two statistics for y and z, got {list(stats)}."
        )
    terms: dict[Exponents, int] = {}
    for w in range(1, N + 1):
        for m in enumerate_matrices(w):
            values = matrix_stats(m)
            key = (
                w,
                stat_value(values, stats[0]),
                stat_value(values, stats[1]),
            )
            terms[key] = terms.get(key, 0) + 1
    logger.debug(f"Summed {sum(terms.values())} matrices up to weight {N}")
    return TruncatedSeries(terms, N, weights)


def _primitive_term(p: FishburnMatrix) -> Exponents:
    return (p.pc, p.lc - 1, ne(p))


def P_brute(N: int) -> TruncatedSeries:
    """``sum x^pc y^(lc-1) z^ne`` over primitive matrices, totally graded.

    A primitive matrix of weight ``w`` contributes in degree at least
    ``w``, so those of weight ``<= N`` give every term up to degree ``N``.
    """
    require_within("weight", N, get_settings().max_weight)
    terms: dict[Exponents, int] = {}
    for p in primitive_up_to(N):
        key = _primitive_term(p)
        terms[key] = terms.get(key, 0) + 1
    return TruncatedSeries(terms, N, TOTAL_GRADING)


def exact_degree(k: int) -> int:
    """A degree bound under which the dimension-``k`` recurrence is exact."""
    return 2 * k * (k + 1) + (k + 1) * (k + 2) + 2


def P_k_brute(k: int, degree: int | None = None) -> TruncatedSeries:
    """The polynomial ``P_k`` of the primitive matrices of dimension ``k``."""
    if k < 1:
        raise SeriesError(f"Dimension must be positive, got {k}.")
    limit = exact_degree(k) if degree is None else degree
    terms: dict[Exponents, int] = {}
    for p in enumerate_primitive(dimension=k):
        key = _primitive_term(p)
        terms[key] = terms.get(key, 0) + 1
    return TruncatedSeries(terms, limit, TOTAL_GRADING)
