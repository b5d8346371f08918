"""Bivincular-pattern avoiders and the conjectures relating them to
Fishburn matrices."""

from fishlab.permutations.conjectures import (
    ConjectureReport,
    conjecture_pat1_necessary,
    conjecture_pat2,
)
from fishlab.permutations.model import (
    CornerStats,
    InvalidPermutation,
    Permutation,
    avoids_bivincular,
    corner_stats,
    enumerate_avoiders,
    enumerate_permutations,
)

__all__ = [
    "ConjectureReport",
    "CornerStats",
    "InvalidPermutation",
    "Permutation",
    "avoids_bivincular",
    "conjecture_pat1_necessary",
    "conjecture_pat2",
    "corner_stats",
    "enumerate_avoiders",
    "enumerate_permutations",
]
