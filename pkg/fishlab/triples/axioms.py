"""Axiom checks for Fishburn triples and Catalan pairs.

A Fishburn triple ``(T, S, R)`` satisfies

* Fa: ``S``, ``R`` and ``T | R`` are partial orders;
* Fb: distinct elements are comparable by exactly one of ``T``, ``S``, ``R``;
* C1c: ``xSy`` and ``yRz`` imply ``xRz``;
* C1c*: ``xSy`` and ``zRy`` imply ``zRx``;
* C2c: no ``xTy, xTz, yRz`` and no ``yTx, zTx, zRy``.

``(S, R)`` is a C1-pair iff ``(0, S, R)`` is a triple, ``(T, R)`` a C2-pair
iff ``(T, 0, R)`` is one. The variant of C2c that forbids ``yTx, zTx, yRz``
instead is the same condition with ``y`` and ``z`` renamed.
"""

from __future__ import annotations

import itertools

from fishlab.base.exceptions import TripleError
from fishlab.base.types import FrozenModel
from fishlab.relations.model import Relation, RelStructure


class WrongComponentCount(TripleError):
    def __init__(self, expected: int, actual: int) -> None:
        super().__init__(
            f"Expected {expected} components, got {actual}.",
            {"expected": expected, "actual": actual},
        )


class AxiomViolation(FrozenModel):
    """The first violated axiom and the elements witnessing it."""

    axiom: str
    witness: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.axiom} violated by {self.witness}"


def _order_witness(r: Relation) -> tuple[int, ...] | None:
    """Elements breaking transitivity, or None for a partial order."""
    for a, b in r.pairs():
        for c in r.successors(b):
            if c == a:
                return (a, b)
            if not r.has(a, c):
                return (a, b, c)
    return None


def check_f_triple(t: RelStructure) -> AxiomViolation | None:
    """Return the first violated axiom, checked in the order
    Fa, Fb, C1c, C1c*, C2c, or None if ``t`` is a Fishburn triple."""
    if t.k != 3:
        raise WrongComponentCount(3, t.k)
    T, S, R = t.components
    for rel in (S, R, T.union(R)):
        witness = _order_witness(rel)
        if witness is not None:
            return AxiomViolation(axiom="Fa", witness=witness)

    for x, y in itertools.combinations(range(t.n), 2):
        if sum(rel.comparable(x, y) for rel in (T, S, R)) != 1:
            return AxiomViolation(axiom="Fb", witness=(x, y))

    triples = list(itertools.permutations(range(t.n), 3))
    for x, y, z in triples:
        if S.has(x, y) and R.has(y, z) and not R.has(x, z):
            return AxiomViolation(axiom="C1c", witness=(x, y, z))
    for x, y, z in triples:
        if S.has(x, y) and R.has(z, y) and not R.has(z, x):
            return AxiomViolation(axiom="C1c*", witness=(x, y, z))
    for x, y, z in triples:
        if T.has(x, y) and T.has(x, z) and R.has(y, z):
            return AxiomViolation(axiom="C2c", witness=(x, y, z))
        if T.has(y, x) and T.has(z, x) and R.has(z, y):
            return AxiomViolation(axiom="C2c", witness=(x, y, z))
    return None


def is_f_triple(t: RelStructure) -> bool:
    return check_f_triple(t) is None


def _pair_as_triple(
    pair: RelStructure, first_is_s: bool
) -> RelStructure:
    if pair.k != 2:
        raise WrongComponentCount(2, pair.k)
    empty = Relation.empty(pair.n)
    first, r = pair.components
    t, s = (empty, first) if first_is_s else (first, empty)
    return RelStructure.of(t, s, r, names=("T", "S", "R"))


def check_c1_pair(pair: RelStructure) -> AxiomViolation | None:
    """Check ``(S, R)`` through the triple ``(0, S, R)``."""
    return check_f_triple(_pair_as_triple(pair, first_is_s=True))


def check_c2_pair(pair: RelStructure) -> AxiomViolation | None:
    """Check ``(T, R)`` through the triple ``(T, 0, R)``."""
    return check_f_triple(_pair_as_triple(pair, first_is_s=False))


def is_c1_pair(pair: RelStructure) -> bool:
    return check_c1_pair(pair) is None


def is_c2_pair(pair: RelStructure) -> bool:
    return check_c2_pair(pair) is None
