"""Dyck paths as Catalan pairs of both types, and the bijection psi.

``c1_of_dyck`` builds ``(S, R)`` on the tunnels of a path: a tunnel is
S-below every tunnel it is nested in and R-below every tunnel it precedes.
``c2_of_dyck`` builds ``(T, R)`` on ``1..n`` from the unit squares
``s(i, j)`` with top-right corner ``(i, j)``: ``s(i, j)`` lies above the path
iff the ``i``-th right-step is preceded by fewer than ``j`` up-steps.
"""

from __future__ import annotations

import logging

from fishlab.base.cache import lookup_cache
from fishlab.base.config import get_settings, require_within
from fishlab.base.exceptions import CatalanError
from fishlab.catalan.dyck import DyckPath, enumerate_dyck, tunnels
from fishlab.relations.canonical import canonical_form
from fishlab.relations.model import Relation, RelStructure
from fishlab.triples.axioms import check_c1_pair

logger = logging.getLogger(__name__)


class NotC1Pair(CatalanError):
    """The structure violates the C1-pair axioms."""

    pass


class NotC2Pair(CatalanError):
    """The structure violates the C2-pair axioms."""

    pass


def c1_of_dyck(p: DyckPath) -> RelStructure:
    ts = tunnels(p)
    n = len(ts)
    s_pairs = []
    r_pairs = []
    for a in range(n):
        for b in range(n):
            if ts[a].nested_in(ts[b]):
                s_pairs.append((a, b))
            elif ts[a].precedes(ts[b]):
                r_pairs.append((a, b))
    return RelStructure.of(
        Relation.from_pairs(n, s_pairs),
        Relation.from_pairs(n, r_pairs),
        names=("S", "R"),
    )


def ups_before_rights(p: DyckPath) -> list[int]:
    """Number of up-steps preceding each right-step, in path order."""
    counts = []
    ups = 0
    for step in p.steps:
        if step == "U":
            ups += 1
        else:
            counts.append(ups)
    return counts


def square_above(p: DyckPath, i: int, j: int) -> bool:
    """True iff the unit square with top-right corner ``(i, j)`` lies above
    the path (1-indexed)."""
    return ups_before_rights(p)[i - 1] <= j - 1


def c2_of_dyck(p: DyckPath) -> RelStructure:
    """``(T, R)`` on elements ``0..n-1`` standing for ``1..n``."""
    counts = ups_before_rights(p)
    n = p.n
    t_pairs = []
    r_pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            # square s(i+1, j+1) is above iff counts[i] <= j
            if counts[i] <= j:
                r_pairs.append((i, j))
            else:
                t_pairs.append((i, j))
    return RelStructure.of(
        Relation.from_pairs(n, t_pairs),
        Relation.from_pairs(n, r_pairs),
        names=("T", "R"),
    )


def _psi_table(n: int) -> dict[bytes, RelStructure]:
    cache = lookup_cache("psi")
    table = cache.get(n)
    if table is None:
        require_within("dyck order", n, get_settings().max_dyck_order)
        table = {
            canonical_form(c1_of_dyck(p)): c2_of_dyck(p)
            for p in enumerate_dyck(n)
        }
        cache[n] = table
        logger.debug(f"Built psi lookup table for order {n}")
    return table  # type: ignore[no-any-return]


def psi(c1: RelStructure) -> RelStructure:
    """The C2-pair of the Dyck path whose C1-pair is isomorphic to ``c1``.

    Raises:
        NotC1Pair: If ``c1`` is not a C1-pair.
    """
    violation = check_c1_pair(c1)
    if violation is not None:
        raise NotC1Pair(
            f"Not a C1-pair: {violation}", violation.model_dump()
        )
    return _psi_table(c1.n)[canonical_form(c1)]
