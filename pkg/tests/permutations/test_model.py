"""Tests for permutations and the bivincular pattern."""

from __future__ import annotations

import os
from unittest.mock import patch

import pytest

from fishlab.base.exceptions import BoundExceededError
from fishlab.permutations.model import (
    InvalidPermutation,
    Permutation,
    avoids_bivincular,
    corner_stats,
    enumerate_avoiders,
    enumerate_permutations,
)


def perm(text: str) -> Permutation:
    return Permutation.parse(text)


class TestPermutation:
    def test_parse_and_inverse(self) -> None:
        p = perm("2 3 1")
        assert p.values == (2, 3, 1)
        assert p.inverse() == perm("3 1 2")
        assert str(p) == "2 3 1"

    def test_involution(self) -> None:
        assert perm("2 1 3").is_involution()
        assert not perm("2 3 1").is_involution()

    def test_not_a_permutation(self) -> None:
        with pytest.raises(InvalidPermutation):
            Permutation(values=(1, 1))
        with pytest.raises(InvalidPermutation):
            perm("2 3")

    def test_non_integer(self) -> None:
        with pytest.raises(InvalidPermutation, match="non-integer"):
            perm("1 x")


class TestPattern:
    def test_contains(self) -> None:
        assert not avoids_bivincular(perm("1 3 2"))
        assert not avoids_bivincular(perm("2 4 1 3"))

    def test_avoids(self) -> None:
        assert avoids_bivincular(perm("3 4 1 2"))
        assert avoids_bivincular(perm("2 3 1"))

    @pytest.mark.parametrize(
        ("n", "expected"), [(1, 1), (2, 2), (3, 5), (4, 15), (5, 53)]
    )
    def test_avoiders_are_counted_by_fishburn_numbers(
        self, n: int, expected: int
    ) -> None:
        assert sum(1 for _ in enumerate_avoiders(n)) == expected

    def test_size_bound(self, fresh_settings) -> None:
        with patch.dict(os.environ, {"FISHLAB_MAX_PERM_SIZE": "4"}):
            with pytest.raises(BoundExceededError):
                next(enumerate_permutations(5))


def test_corner_stats() -> None:
    stats = corner_stats(perm("3 1 2"))
    assert (stats.lr_max, stats.lr_min) == (1, 2)
    assert (stats.rl_max, stats.rl_min) == (2, 2)


def test_identity_corners() -> None:
    stats = corner_stats(perm("1 2 3 4"))
    assert stats.lr_max == stats.rl_min == 4
    assert stats.rl_max == stats.lr_min == 1
