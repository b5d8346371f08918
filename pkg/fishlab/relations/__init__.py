"""Finite binary relations, relational structures and poset patterns."""

from fishlab.relations.canonical import OverBoundError, canonical_form
from fishlab.relations.loader import (
    dump_structure,
    load_structure,
    parse_structure,
)
from fishlab.relations.model import (
    Relation,
    RelStructure,
    indistinguishable,
    is_partial_order,
    minmax,
    mmax,
    mmin,
)
from fishlab.relations.patterns import (
    ComponentCountMismatch,
    avoids,
    contains,
    pattern,
)

__all__ = [
    "ComponentCountMismatch",
    "OverBoundError",
    "Relation",
    "RelStructure",
    "avoids",
    "canonical_form",
    "contains",
    "dump_structure",
    "indistinguishable",
    "is_partial_order",
    "load_structure",
    "minmax",
    "mmax",
    "mmin",
    "parse_structure",
    "pattern",
]
