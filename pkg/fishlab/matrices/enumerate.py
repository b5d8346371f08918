"""Exhaustive generation of Fishburn matrices of a given weight.

Primitive matrices are generated depth-first from ``[1]`` by valid
extensions, codes in lexicographic order with D < I < S. An extension with
code ``w`` adds ``1 + #D(w)`` to the weight, so branches are cut as soon as
the primitive weight exceeds the target. Each primitive matrix is then
inflated in every way that reaches the target weight, inflation vectors in
colexicographic order.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator

from fishlab.base.cache import lookup_cache
from fishlab.base.types import Avoidance, CellPosition
from fishlab.matrices.cells import cell_position
from fishlab.matrices.extension import ROOT, extend, inflate, valid_codes
from fishlab.matrices.model import FishburnMatrix

logger = logging.getLogger(__name__)

_AVOIDED_POSITION = {
    Avoidance.nw: CellPosition.strict_nw,
    Avoidance.sw: CellPosition.strict_sw,
}


def has_pair(m: FishburnMatrix, position: CellPosition) -> bool:
    """True iff two nonzero cells of ``m`` stand in ``position``."""
    cells = m.nonzero_cells()
    return any(cell_position(c, d) == position for c in cells for d in cells)


def passes(m: FishburnMatrix, avoid: Avoidance) -> bool:
    if avoid is Avoidance.none:
        return True
    return not has_pair(m, _AVOIDED_POSITION[avoid])


def _walk(
    p: FishburnMatrix, max_weight: int, max_dimension: int
) -> Iterator[FishburnMatrix]:
    yield p
    if p.k >= max_dimension:
        return
    base = p.weight
    for code in valid_codes(p.lc):
        if base + code.word.count("D") + 1 > max_weight:
            continue
        yield from _walk(extend(p, code), max_weight, max_dimension)


def primitive_up_to(max_weight: int) -> tuple[FishburnMatrix, ...]:
    """All primitive matrices of weight at most ``max_weight``, DFS order."""
    cache = lookup_cache("primitive_up_to")
    found = cache.get(max_weight)
    if found is None:
        found = tuple(_walk(ROOT, max_weight, max_weight))
        cache[max_weight] = found
        logger.debug(
            f"{len(found)} primitive matrices of weight <= {max_weight}"
        )
    return found  # type: ignore[no-any-return]


def enumerate_primitive(
    weight: int | None = None,
    dimension: int | None = None,
    avoid: Avoidance = Avoidance.none,
) -> Iterator[FishburnMatrix]:
    """Primitive matrices of the given weight and/or dimension.

    A primitive matrix of dimension ``k`` has weight at most
    ``k * (k + 1) // 2``, so either bound alone keeps the search finite.
    """
    if weight is None and dimension is None:
        raise ValueError("Give a weight, a dimension, or both.")
    if weight is not None:
        pool = (p for p in primitive_up_to(weight) if p.weight == weight)
    else:
        assert dimension is not None
        top = dimension * (dimension + 1) // 2
        pool = _walk(ROOT, top, dimension)
    for p in pool:
        if dimension is not None and p.k != dimension:
            continue
        if passes(p, avoid):
            yield p


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` into ``parts`` positive parts, colex order."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        if n >= 1:
            yield (n,)
        return
    for last in range(1, n - parts + 2):
        for head in compositions(n - last, parts - 1):
            yield head + (last,)


def inflations(p: FishburnMatrix, weight: int) -> Iterator[FishburnMatrix]:
    """Every inflation of the primitive ``p`` reaching ``weight``."""
    cells = p.nonzero_cells()
    for values in compositions(weight, len(cells)):
        yield inflate(p, dict(zip(cells, values)))


def enumerate_matrices(
    weight: int,
    primitive_only: bool = False,
    avoid: Avoidance = Avoidance.none,
) -> Iterator[FishburnMatrix]:
    """Each Fishburn matrix of the given weight exactly once.

    Avoidance filters depend only on the nonzero pattern and are applied to
    the primitive matrix before inflating.
    """
    if weight < 1:
        raise ValueError(f"Weight must be positive, got {weight}")
    if primitive_only:
        yield from enumerate_primitive(weight=weight, avoid=avoid)
        return
    for p in primitive_up_to(weight):
        if passes(p, avoid):
            yield from inflations(p, weight)


def count_matrices(
    weight: int,
    primitive_only: bool = False,
    avoid: Avoidance = Avoidance.none,
) -> int:
    return sum(1 for _ in enumerate_matrices(weight, primitive_only, avoid))
