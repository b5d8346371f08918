"""Closed forms for the Fishburn generating functions.

``F(x, y, z)`` counts Fishburn matrices by weight, last-column weight and
number of wNE-cells; ``G(x, y) = F(x, y, 1)``; ``P(x, y, z)`` counts
primitive matrices by ``pc``, ``lc - 1`` and the number of wNE-cells.

Every sum below is infinite. Its ``n``-th summand has valuation growing
with ``n``, so the sums stop once a summand can only contribute above the
truncation degree, and each summand's valuation is checked on the way.
"""

from __future__ import annotations

import logging

from fishlab.base.exceptions import SeriesError
from fishlab.series.model import (
    TOTAL_GRADING,
    X_GRADING,
    Grading,
    TruncatedSeries,
    pochhammer,
)

logger = logging.getLogger(__name__)


def _variables(
    degree: int, weights: Grading
) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    return (
        TruncatedSeries.variable("x", degree, weights),
        TruncatedSeries.variable("y", degree, weights),
        TruncatedSeries.variable("z", degree, weights),
    )


def _check_x_valuation(term: TruncatedSeries, at_least: int, n: int) -> None:
    valuation = term.x_valuation()
    if valuation is not None and valuation < at_least:
        raise SeriesError(
            f"Summand {n} has x-valuation {valuation}, expected at least "
            f"{at_least}.",
            {"summand": n, "valuation": valuation},
        )


def F_formula(N: int, weights: Grading = X_GRADING) -> TruncatedSeries:
    """``xyz * sum_n ((1 - xy)(1 - xz); 1 - x)_n``."""
    if N < 1:
        raise SeriesError(f"Truncation degree must be positive, got {N}.")
    x, y, z = _variables(N, weights)
    a = (1 - x * y) * (1 - x * z)
    q = 1 - x
    total = TruncatedSeries({}, N, weights)
    term = pochhammer(a, q, 0)
    aq = a
    for n in range(N):
        if n:
            term = term * (1 - aq)
            aq = aq * q
        _check_x_valuation(term, n, n)
        total = total + term
    return x * y * z * total


def G_formula(N: int, which: int) -> TruncatedSeries:
    """One of the three known closed forms of ``G(x, y)``, x-graded."""
    if N < 1:
        raise SeriesError(f"Truncation degree must be positive, got {N}.")
    x, y, _ = _variables(N, X_GRADING)
    total = TruncatedSeries({}, N, X_GRADING)
    if which == 1:
        geometric = (1 - x * y).invert_unit()
        for n in range(N):
            term = x * y * geometric ** (n + 1) * pochhammer(1 - x, 1 - x, n)
            _check_x_valuation(term, n + 1, n)
            total = total + term
    elif which == 2:
        for n in range(1, N + 1):
            term = pochhammer(1 - x * y, 1 - x, n)
            _check_x_valuation(term, n, n)
            total = total + term
    elif which == 3:
        p = (1 - x * y).invert_unit()
        q = (1 - x).invert_unit()
        total = total - 1
        for n in range(N // 2 + 1):
            term = p * q**n * pochhammer(p, q, n) * pochhammer(q, q, n)
            _check_x_valuation(term, 2 * n, n)
            total = total + term
    else:
        raise SeriesError(f"There are three G formulas, not {which}.")
    logger.debug(f"Expanded G formula {which} to x-degree {N}")
    return total


def P_formula(N: int) -> TruncatedSeries:
    """``z/(1+y) * sum_n (A; Q)_n`` with ``A = (1+x-xz)/((1+x)(1+y))`` and
    ``Q = 1/(1+x)``, totally graded."""
    if N < 1:
        raise SeriesError(f"Truncation degree must be positive, got {N}.")
    x, y, z = _variables(N, TOTAL_GRADING)
    inv_x = (1 + x).invert_unit()
    inv_y = (1 + y).invert_unit()
    a = (1 + x - x * z) * inv_x * inv_y
    total = TruncatedSeries({}, N, TOTAL_GRADING)
    for n in range(N + 1):
        term = pochhammer(a, inv_x, n)
        valuation = term.valuation()
        if valuation is not None and valuation < n:
            raise SeriesError(
                f"Summand {n} of P has valuation {valuation}.",
                {"summand": n},
            )
        total = total + term
    return z * inv_y * total


def functional_equation_rhs(P: TruncatedSeries) -> TruncatedSeries:
    """``z/(1+y) + ((xz + xy + y)/(1+y)) * P(x, x + y + xy, z)``."""
    x, y, z = _variables(P.max_degree, P.weights)  # type: ignore[arg-type]
    inv_y = (1 + y).invert_unit()
    shifted = P.substitute_y(x + y + x * y)
    return z * inv_y + (x * z + x * y + y) * inv_y * shifted


def inflate_primitive_series(P: TruncatedSeries) -> TruncatedSeries:
    """``xy/(1-xy) * P(x/(1-x), xy/(1-xy), z)``: the series of all
    inflations of the primitive matrices counted by ``P``."""
    x, y, _ = _variables(P.max_degree, P.weights)  # type: ignore[arg-type]
    xy = x * y
    geometric_xy = xy / (1 - xy)
    return geometric_xy * P.compose(x=x / (1 - x), y=geometric_xy)
