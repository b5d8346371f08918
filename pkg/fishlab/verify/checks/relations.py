"""Checks on relations, containment and canonical forms."""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from fishlab.base.types import PatternId
from fishlab.matrices.enumerate import enumerate_matrices
from fishlab.matrices.orders import matrix_to_order
from fishlab.relations.canonical import canonical_form
from fishlab.relations.model import (
    Relation,
    RelStructure,
    is_partial_order,
    minmax,
)
from fishlab.relations.patterns import avoids, contains
from fishlab.verify.registry import check
from fishlab.verify.report import Outcome, SuiteParams, fail, ok


def all_posets(n: int) -> Iterator[Relation]:
    """Every labeled partial order on ``n`` elements."""
    slots = [(a, b) for a in range(n) for b in range(n) if a != b]
    for bits in range(1 << len(slots)):
        pairs = [slot for i, slot in enumerate(slots) if bits >> i & 1]
        r = Relation.from_pairs(n, pairs)
        if is_partial_order(r):
            yield r


def interval_orders(max_weight: int) -> Iterator[RelStructure]:
    for w in range(1, max_weight + 1):
        for m in enumerate_matrices(w):
            yield matrix_to_order(m).poset


@check("relations.extremes_nonempty")
def extremes_nonempty(params: SuiteParams) -> Outcome:
    posets = itertools.chain(
        *(all_posets(n) for n in range(1, 5)),
        (s.components[0] for s in interval_orders(params.capped(6))),
    )
    for r in posets:
        minimal, maximal = minmax(r)
        if not minimal or not maximal:
            return fail("Poset without minimal or maximal element", r.pairs())
    return ok()


@check("relations.canonical_invariance")
def canonical_invariance(params: SuiteParams) -> Outcome:
    for s in interval_orders(params.capped(5)):
        key = canonical_form(s)
        for image in itertools.permutations(range(s.n)):
            relabeled = s.relabel(image)
            if canonical_form(relabeled) != key:
                return fail(
                    "Relabeling changed the canonical form",
                    {"pairs": s.components[0].pairs(), "image": image},
                )
            for pid in PatternId:
                if avoids(relabeled, pid) != avoids(s, pid):
                    return fail(
                        f"Avoidance of {pid.value} is not invariant",
                        {"pairs": s.components[0].pairs(), "image": image},
                    )
    return ok()


@check("relations.canonical_separates")
def canonical_separates(params: SuiteParams) -> Outcome:
    """Non-isomorphic 4-element posets get distinct canonical forms."""
    classes: dict[bytes, RelStructure] = {}
    for r in all_posets(4):
        s = RelStructure.of(r)
        classes.setdefault(canonical_form(s), s)
    # there are 16 unlabeled posets on four elements
    if len(classes) != 16:
        return fail(f"Found {len(classes)} classes of 4-element posets")
    return ok()


@check("relations.containment_order")
def containment_order(params: SuiteParams) -> Outcome:
    """Containment is reflexive and transitive."""
    small = list(interval_orders(params.capped(4)))
    for s in small:
        if not contains(s, s):
            return fail("Structure does not contain itself", s.model_dump())
    for a, b, c in itertools.product(small, repeat=3):
        if contains(b, a) and contains(c, b) and not contains(c, a):
            return fail(
                "Containment is not transitive",
                [x.components[0].pairs() for x in (a, b, c)],
            )
    return ok()
