"""Canonical byte encodings of relational structures up to isomorphism.

The encoding concatenates the adjacency matrices of all components under a
relabeling of the ground set and keeps the lexicographically smallest one.
Candidate relabelings are the leaves of an individualise-and-refine search:
an isomorphism-invariant colour refinement orders the ground set into
classes, and a class that stays larger than one element is split by giving
each of its members in turn a colour of its own. Members of a class that
are pairwise interchangeable are only tried once.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence

from fishlab.base.config import get_settings
from fishlab.base.exceptions import BoundExceededError
from fishlab.relations.model import RelStructure

logger = logging.getLogger(__name__)


class OverBoundError(BoundExceededError):
    """The structure is too large for exhaustive canonisation."""

    pass


def _renumber(keys: Sequence[object]) -> list[int]:
    ordered = sorted(set(keys))  # type: ignore[type-var]
    ranking = {key: i for i, key in enumerate(ordered)}
    return [ranking[key] for key in keys]


def _refine(s: RelStructure, colours: list[int]) -> list[int]:
    distinct = len(set(colours))
    while True:
        signatures = []
        for a in range(s.n):
            neighbourhood = tuple(
                (
                    tuple(sorted(colours[b] for b in comp.successors(a))),
                    tuple(sorted(colours[b] for b in comp.predecessors(a))),
                )
                for comp in s.components
            )
            signatures.append((colours[a], neighbourhood))
        refined = _renumber(signatures)
        if len(set(refined)) == distinct:
            return refined
        colours, distinct = refined, len(set(refined))


def _interchangeable(s: RelStructure, x: int, y: int) -> bool:
    """True iff swapping ``x`` and ``y`` is an automorphism."""
    for comp in s.components:
        if comp.has(x, y) != comp.has(y, x):
            return False
        for z in range(s.n):
            if z in (x, y):
                continue
            if comp.has(x, z) != comp.has(y, z):
                return False
            if comp.has(z, x) != comp.has(z, y):
                return False
    return True


def _leaves(s: RelStructure, colours: list[int]) -> Iterator[list[int]]:
    colours = _refine(s, colours)
    if len(set(colours)) == s.n:
        order = sorted(range(s.n), key=colours.__getitem__)
        yield order
        return
    sizes: dict[int, int] = {}
    for c in colours:
        sizes[c] = sizes.get(c, 0) + 1
    target = min(c for c, size in sizes.items() if size > 1)
    members = [a for a in range(s.n) if colours[a] == target]
    if all(_interchangeable(s, members[0], y) for y in members[1:]):
        members = members[:1]
    for v in members:
        split = _renumber(
            [(c, 0 if a == v else 1) for a, c in enumerate(colours)]
        )
        yield from _leaves(s, split)


def _encode(s: RelStructure, order: Sequence[int]) -> int:
    key = 0
    for comp in s.components:
        rows = comp.rows
        for a in order:
            row = rows[a]
            for b in order:
                key = (key << 1) | (row >> b & 1)
    return key


def canonical_form(s: RelStructure, bound: int | None = None) -> bytes:
    """Byte string that is equal for two structures iff they are isomorphic.

    Args:
        s: The structure to encode.
        bound: Largest accepted ground set; defaults to ``FISHLAB_MAX_ORDER``.

    Raises:
        OverBoundError: If ``s.n`` exceeds the bound.
    """
    limit = get_settings().max_order if bound is None else bound
    if s.n > limit:
        raise OverBoundError("order", s.n, limit)

    best = min(
        (_encode(s, order) for order in _leaves(s, [0] * s.n)), default=0
    )
    width = (s.k * s.n * s.n + 7) // 8
    return bytes([s.n, s.k]) + best.to_bytes(width, "big")
