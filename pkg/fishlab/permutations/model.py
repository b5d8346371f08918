"""Permutations, the bivincular pattern and corner statistics.

A permutation ``p_1 .. p_n`` contains the bivincular pattern when there are
positions ``i + 1 = j < k`` with ``p_i + 1 = p_k < p_j``. Permutations
avoiding it are counted by the Fishburn numbers.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator

from pydantic import Field, field_validator

from fishlab.base.config import get_settings, require_within
from fishlab.base.exceptions import PermutationError
from fishlab.base.types import FrozenModel

logger = logging.getLogger(__name__)


class InvalidPermutation(PermutationError):
    """The values are not a rearrangement of ``1..n``."""

    pass


class Permutation(FrozenModel):
    values: tuple[int, ...]

    @field_validator("values")
    @classmethod
    def _check_values(cls, values: tuple[int, ...]) -> tuple[int, ...]:
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidPermutation(
                f"{list(values)} is not a permutation of 1..{len(values)}.",
                {"values": list(values)},
            )
        return values

    @classmethod
    def parse(cls, text: str) -> Permutation:
        try:
            values = tuple(int(token) for token in text.split())
        except ValueError:
            raise InvalidPermutation(
                f"Permutation '{text}' has a non-integer entry."
            ) from None
        return cls(values=values)

    @property
    def n(self) -> int:
        return len(self.values)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for position, value in enumerate(self.values, start=1):
            inv[value - 1] = position
        return Permutation(values=tuple(inv))

    def is_involution(self) -> bool:
        return self.inverse() == self

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


def avoids_bivincular(p: Permutation) -> bool:
    v = p.values
    for i in range(p.n - 2):
        target = v[i] + 1
        if target >= v[i + 1]:
            continue
        if target in v[i + 2 :]:
            return False
    return True


class CornerStats(FrozenModel):
    lr_max: int = Field(description="Left-to-right maxima.")
    lr_min: int = Field(description="Left-to-right minima.")
    rl_max: int = Field(description="Right-to-left maxima.")
    rl_min: int = Field(description="Right-to-left minima.")


def _records(values: tuple[int, ...], larger: bool) -> int:
    count = 0
    best: int | None = None
    for value in values:
        if best is None or (value > best if larger else value < best):
            best = value
            count += 1
    return count


def corner_stats(p: Permutation) -> CornerStats:
    reverse = p.values[::-1]
    return CornerStats(
        lr_max=_records(p.values, larger=True),
        lr_min=_records(p.values, larger=False),
        rl_max=_records(reverse, larger=True),
        rl_min=_records(reverse, larger=False),
    )


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """All permutations of size ``n`` in lexicographic order."""
    require_within("permutation size", n, get_settings().max_perm_size)
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values=values)


def enumerate_avoiders(n: int) -> Iterator[Permutation]:
    """Permutations of size ``n`` avoiding the bivincular pattern."""
    count = 0
    for p in enumerate_permutations(n):
        if avoids_bivincular(p):
            count += 1
            yield p
    logger.debug(f"{count} avoiders of size {n}")
