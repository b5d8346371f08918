"""Tests for relations, structures and their predicates."""

from __future__ import annotations

import pytest

from fishlab.base.exceptions import RelationError
from fishlab.relations.model import (
    Relation,
    RelStructure,
    indistinguishable,
    is_partial_order,
    minmax,
    mmax,
    mmin,
)

CHAIN = Relation.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
N_PATTERN = Relation.from_pairs(4, [(0, 1), (0, 3), (2, 1)])


class TestRelation:
    def test_pairs_round_trip(self) -> None:
        assert CHAIN.pairs() == [(0, 1), (0, 2), (1, 2)]
        assert CHAIN.size() == 3

    def test_reflexive_pair_rejected(self) -> None:
        with pytest.raises(RelationError, match="not irreflexive"):
            Relation.from_pairs(2, [(1, 1)])

    def test_out_of_range_rejected(self) -> None:
        with pytest.raises(RelationError, match="outside"):
            Relation.from_pairs(2, [(0, 2)])

    def test_inverse(self) -> None:
        assert CHAIN.inverse().pairs() == [(1, 0), (2, 0), (2, 1)]
        assert CHAIN.inverse().inverse() == CHAIN

    def test_union_needs_same_ground_set(self) -> None:
        with pytest.raises(RelationError, match="Cannot unite"):
            CHAIN.union(Relation.empty(2))

    def test_relabel(self) -> None:
        assert CHAIN.relabel([2, 1, 0]) == CHAIN.inverse()

    def test_restrict(self) -> None:
        assert N_PATTERN.restrict([2, 1]).pairs() == [(0, 1)]

    def test_linear_order(self) -> None:
        assert CHAIN.is_linear_order()
        assert not N_PATTERN.is_linear_order()
        assert Relation.empty(1).is_linear_order()


class TestPartialOrder:
    @pytest.mark.parametrize(
        "pairs, expected",
        [
            ([], True),
            ([(0, 1), (1, 2)], False),
            ([(0, 1), (1, 2), (0, 2)], True),
        ],
    )
    def test_is_partial_order(self, pairs, expected) -> None:
        assert is_partial_order(Relation.from_pairs(3, pairs)) is expected

    def test_two_cycle_is_not_transitive(self) -> None:
        assert not is_partial_order(Relation.from_pairs(2, [(0, 1), (1, 0)]))


class TestMinMax:
    def test_empty_relation(self) -> None:
        everything = frozenset(range(4))
        assert minmax(Relation.empty(4)) == (everything, everything)

    def test_chain(self) -> None:
        assert minmax(CHAIN) == (frozenset({0}), frozenset({2}))

    def test_n_pattern(self) -> None:
        assert minmax(N_PATTERN) == (frozenset({0, 2}), frozenset({1, 3}))
        assert (mmin(N_PATTERN), mmax(N_PATTERN)) == (2, 2)

    def test_arbitrary_relation_with_cycle(self) -> None:
        cycle = Relation.from_pairs(3, [(0, 1), (1, 0)])
        assert minmax(cycle) == (frozenset({2}), frozenset({2}))


def test_indistinguishable() -> None:
    # 0 and 1 both lie below 2
    r = Relation.from_pairs(3, [(0, 2), (1, 2)])
    assert indistinguishable(r, 0, 1)
    assert not indistinguishable(r, 0, 2)


class TestRelStructure:
    def test_component_sizes_must_agree(self) -> None:
        with pytest.raises(RelationError, match="ground set size"):
            RelStructure(
                n=3, components=(CHAIN, Relation.empty(2)), names=()
            )

    def test_named_component(self) -> None:
        s = RelStructure.of(CHAIN, CHAIN.inverse(), names=("S", "R"))
        assert s.k == 2
        assert s.component("R") == CHAIN.inverse()
        with pytest.raises(RelationError, match="No component named 'T'"):
            s.component("T")

    def test_needs_a_component(self) -> None:
        with pytest.raises(RelationError, match="at least one"):
            RelStructure.of()
