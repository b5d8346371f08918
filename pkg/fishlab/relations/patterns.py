"""Fixed 4-element poset patterns and induced-substructure containment."""

from __future__ import annotations

import logging

from fishlab.base.exceptions import RelationError
from fishlab.base.types import PatternId
from fishlab.relations.model import Relation, RelStructure

logger = logging.getLogger(__name__)


class ComponentCountMismatch(RelationError):
    """Host and pattern have a different number of components."""

    def __init__(self, expected: int, actual: int) -> None:
        super().__init__(
            f"Expected a structure with {expected} component(s), "
            f"got {actual}.",
            {"expected": expected, "actual": actual},
        )


_PATTERN_PAIRS: dict[PatternId, list[tuple[int, int]]] = {
    PatternId.two_plus_two: [(0, 1), (2, 3)],
    PatternId.three_plus_one: [(0, 1), (1, 2), (0, 2)],
    PatternId.n: [(0, 1), (0, 3), (2, 1)],
}


def pattern(pid: PatternId) -> RelStructure:
    """The one-component structure of a named 4-element poset."""
    return RelStructure.of(Relation.from_pairs(4, _PATTERN_PAIRS[pid]))


def _degrees(s: RelStructure) -> tuple[list[list[int]], list[list[int]]]:
    out_deg = [[row.bit_count() for row in c.rows] for c in s.components]
    in_deg = [
        [c.column(b).bit_count() for b in range(s.n)] for c in s.components
    ]
    return out_deg, in_deg


def contains(host: RelStructure, pattern: RelStructure) -> bool:
    """True iff some injection embeds ``pattern`` into ``host``.

    The injection must preserve and reflect every component relation.
    """
    if host.k != pattern.k:
        raise ComponentCountMismatch(host.k, pattern.k)
    if pattern.n > host.n:
        return False

    h_out, h_in = _degrees(host)
    p_out, p_in = _degrees(pattern)
    comps = range(host.k)
    # most constrained pattern elements first
    order = sorted(
        range(pattern.n),
        key=lambda x: -sum(p_out[i][x] + p_in[i][x] for i in comps),
    )
    image = [-1] * pattern.n
    used = [False] * host.n

    def fits(x: int, cand: int) -> bool:
        for i in comps:
            if h_out[i][cand] < p_out[i][x] or h_in[i][cand] < p_in[i][x]:
                return False
        for y in order:
            fy = image[y]
            if fy < 0:
                continue
            for hc, pc in zip(host.components, pattern.components):
                if hc.has(cand, fy) != pc.has(x, y):
                    return False
                if hc.has(fy, cand) != pc.has(y, x):
                    return False
        return True

    def search(depth: int) -> bool:
        if depth == len(order):
            return True
        x = order[depth]
        for cand in range(host.n):
            if used[cand] or not fits(x, cand):
                continue
            image[x] = cand
            used[cand] = True
            if search(depth + 1):
                return True
            image[x] = -1
            used[cand] = False
        return False

    found = search(0)
    logger.debug(
        f"Embedding of order {pattern.n} into order {host.n}: {found}"
    )
    return found


def avoids(host: RelStructure, p: PatternId) -> bool:
    """True iff the one-component ``host`` has no induced copy of ``p``."""
    if host.k != 1:
        raise ComponentCountMismatch(1, host.k)
    return not contains(host, pattern(p))
