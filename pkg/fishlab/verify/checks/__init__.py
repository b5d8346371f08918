"""Check modules; importing this package registers every check."""

from fishlab.verify.checks import (  # noqa: F401
    catalan,
    matrices,
    permutations,
    relations,
    series,
    triples,
)
