"""Identities between the closed forms and the brute-force series."""

from __future__ import annotations

import logging

from pydantic import Field

from fishlab.base.types import FrozenModel
from fishlab.series.brute import P_brute, P_k_brute, exact_degree
from fishlab.series.formulas import (
    F_formula,
    G_formula,
    P_formula,
    functional_equation_rhs,
    inflate_primitive_series,
)
from fishlab.series.model import TOTAL_GRADING, X_GRADING, TruncatedSeries

logger = logging.getLogger(__name__)

_MAX_REPORTED = 5


class SeriesCheck(FrozenModel):
    """Outcome of comparing two series term by term."""

    name: str
    degree: int
    passed: bool
    mismatches: list[str] = Field(
        default_factory=list,
        description="The first differing terms as 'x^a y^b z^c: lhs != rhs'.",
    )


def compare(
    name: str, lhs: TruncatedSeries, rhs: TruncatedSeries
) -> SeriesCheck:
    keys = sorted(set(lhs.terms) | set(rhs.terms))
    mismatches = [
        f"x^{a} y^{b} z^{c}: {lhs.coefficient((a, b, c))} != "
        f"{rhs.coefficient((a, b, c))}"
        for a, b, c in keys
        if lhs.coefficient((a, b, c)) != rhs.coefficient((a, b, c))
    ]
    if mismatches:
        logger.warning(f"{name}: {len(mismatches)} differing terms")
    return SeriesCheck(
        name=name,
        degree=lhs.max_degree,
        passed=not mismatches,
        mismatches=mismatches[:_MAX_REPORTED],
    )


def fishburn_numbers(series: TruncatedSeries) -> list[int]:
    """Coefficient sums of ``x^1 .. x^N`` over all ``y, z`` exponents."""
    sums = [0] * (series.max_degree + 1)
    for (a, _, _), c in series.items():
        if a <= series.max_degree:
            sums[a] += c
    return sums[1:]


def F_symmetry(N: int) -> SeriesCheck:
    """``F(x, y, z) = F(x, z, y)`` from the closed form alone."""
    F = F_formula(N, TOTAL_GRADING)
    return compare("F symmetric in y and z", F, F.swap("y", "z"))


def G_agreement(N: int) -> list[SeriesCheck]:
    """The three forms of ``G`` against ``F`` at ``z = 1``."""
    reference = F_formula(N, X_GRADING).specialize("z", 1)
    return [
        compare(f"G formula {which} equals F(x, y, 1)", reference, G)
        for which, G in ((w, G_formula(N, w)) for w in (1, 2, 3))
    ]


def recurrence_check(k: int) -> SeriesCheck:
    """``P_{k+1} = (xz + xy + y) P_k(x, x + y + xy, z) - y P_k``."""
    degree = exact_degree(k)
    Pk = P_k_brute(k, degree)
    x = TruncatedSeries.variable("x", degree)
    y = TruncatedSeries.variable("y", degree)
    z = TruncatedSeries.variable("z", degree)
    rhs = (x * z + x * y + y) * Pk.substitute_y(x + y + x * y) - y * Pk
    return compare(
        f"primitive recurrence from dimension {k}",
        P_k_brute(k + 1, degree),
        rhs,
    )


def P_checks(N: int) -> list[SeriesCheck]:
    """Functional equation, closed form and inflation identity for ``P``."""
    P = P_brute(N)
    reports = [
        compare("P functional equation", P, functional_equation_rhs(P)),
        compare("P closed form", P_formula(N), P),
        compare(
            "F is the inflation of P",
            F_formula(N, TOTAL_GRADING),
            inflate_primitive_series(P),
        ),
    ]
    for report in reports:
        logger.debug(f"{report.name} at degree {N}: {report.passed}")
    return reports
