"""Truncated power series and the Fishburn generating-function identities."""

from fishlab.series.brute import P_brute, P_k_brute, brute_series
from fishlab.series.checks import (
    F_symmetry,
    G_agreement,
    P_checks,
    SeriesCheck,
    compare,
    fishburn_numbers,
    recurrence_check,
)
from fishlab.series.formulas import (
    F_formula,
    G_formula,
    P_formula,
    functional_equation_rhs,
    inflate_primitive_series,
)
from fishlab.series.model import (
    TOTAL_GRADING,
    X_GRADING,
    IncompatibleSeries,
    NonUnitConstantTerm,
    NonzeroConstantTerm,
    SeriesDocument,
    TruncatedSeries,
    pochhammer,
)

__all__ = [
    "F_formula",
    "F_symmetry",
    "G_agreement",
    "G_formula",
    "IncompatibleSeries",
    "NonUnitConstantTerm",
    "NonzeroConstantTerm",
    "P_brute",
    "P_checks",
    "P_formula",
    "P_k_brute",
    "SeriesCheck",
    "SeriesDocument",
    "TOTAL_GRADING",
    "TruncatedSeries",
    "X_GRADING",
    "brute_series",
    "compare",
    "fishburn_numbers",
    "functional_equation_rhs",
    "inflate_primitive_series",
    "pochhammer",
    "recurrence_check",
]
