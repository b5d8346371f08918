"""Fishburn triples, their axioms and the involution phi."""

from fishlab.triples.axioms import (
    AxiomViolation,
    WrongComponentCount,
    check_c1_pair,
    check_c2_pair,
    check_f_triple,
    is_c1_pair,
    is_c2_pair,
    is_f_triple,
)
from fishlab.triples.involution import (
    PhiImage,
    phi,
    phi_fixed_points,
    phi_stats,
)
from fishlab.triples.model import (
    FTriple,
    TripleStats,
    f1_triple,
    f2_triple,
    trivial_involution,
    triple_stats,
)

__all__ = [
    "AxiomViolation",
    "FTriple",
    "PhiImage",
    "TripleStats",
    "WrongComponentCount",
    "check_c1_pair",
    "check_c2_pair",
    "check_f_triple",
    "f1_triple",
    "f2_triple",
    "is_c1_pair",
    "is_c2_pair",
    "is_f_triple",
    "phi",
    "phi_fixed_points",
    "phi_stats",
    "triple_stats",
    "trivial_involution",
]
