"""Tests for pattern posets and induced containment."""

from __future__ import annotations

import pytest

from fishlab.base.types import PatternId
from fishlab.matrices.model import validate
from fishlab.matrices.orders import matrix_to_order
from fishlab.relations.model import Relation, RelStructure, is_partial_order
from fishlab.relations.patterns import (
    ComponentCountMismatch,
    avoids,
    contains,
    pattern,
)


def poset(n: int, pairs: list[tuple[int, int]]) -> RelStructure:
    return RelStructure.of(Relation.from_pairs(n, pairs))


@pytest.mark.parametrize("pid", list(PatternId))
def test_patterns_are_four_element_posets(pid: PatternId) -> None:
    p = pattern(pid)
    assert p.n == 4
    assert is_partial_order(p.components[0])


@pytest.mark.parametrize("pid", list(PatternId))
def test_pattern_contains_itself(pid: PatternId) -> None:
    assert not avoids(pattern(pid), pid)


def test_chain_avoids_everything() -> None:
    chain = poset(
        5, [(a, b) for a in range(5) for b in range(a + 1, 5)]
    )
    assert all(avoids(chain, pid) for pid in PatternId)


def test_containment_is_induced() -> None:
    # a 4-chain contains 2+2 as a subgraph but not as an induced poset
    chain = poset(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert avoids(chain, PatternId.two_plus_two)


def test_two_plus_two_inside_larger_poset() -> None:
    host = poset(5, [(0, 1), (2, 3)])
    assert not avoids(host, PatternId.two_plus_two)
    assert avoids(host, PatternId.three_plus_one)


def test_n_pattern_relabeled() -> None:
    host = poset(4, [(3, 2), (3, 0), (1, 2)])
    assert not avoids(host, PatternId.n)


def matrix_poset(rows: list[list[int]]) -> RelStructure:
    return matrix_to_order(validate(rows)).poset


def test_order_of_matrix_contains_three_plus_one() -> None:
    # chain (1,1) < (2,2) < (3,3) with (1,3) incomparable to all
    host = matrix_poset([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
    assert contains(host, pattern(PatternId.three_plus_one))
    assert avoids(host, PatternId.two_plus_two)


def test_order_of_matrix_contains_n() -> None:
    host = matrix_poset([[1, 1, 0], [0, 0, 1], [0, 0, 1]])
    assert avoids(host, PatternId.n) is False


def test_bigger_pattern_never_contained() -> None:
    assert not contains(poset(2, []), poset(3, []))


def test_component_count_mismatch() -> None:
    two = RelStructure.of(Relation.empty(4), Relation.empty(4))
    with pytest.raises(ComponentCountMismatch, match="1 component"):
        avoids(two, PatternId.n)


def test_multi_component_containment() -> None:
    host = RelStructure.of(
        Relation.from_pairs(3, [(0, 1)]), Relation.from_pairs(3, [(1, 2)])
    )
    guest = RelStructure.of(
        Relation.from_pairs(2, [(0, 1)]), Relation.empty(2)
    )
    assert contains(host, guest)
    mixed = RelStructure.of(
        Relation.from_pairs(2, [(0, 1)]), Relation.from_pairs(2, [(0, 1)])
    )
    assert not contains(host, mixed)
