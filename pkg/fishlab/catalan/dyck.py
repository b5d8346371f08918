"""Dyck paths, their tunnels and the classical path statistics.

A path of order ``n`` is a word of ``n`` up-steps ``U`` and ``n``
right-steps ``R`` in which no prefix has more ``R`` than ``U``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator

from pydantic import Field, field_validator

from fishlab.base.exceptions import CatalanError
from fishlab.base.types import FrozenModel

logger = logging.getLogger(__name__)


class InvalidDyckPath(CatalanError):
    """The word is not a Dyck path."""

    pass


class DyckPath(FrozenModel):
    steps: str

    @field_validator("steps")
    @classmethod
    def _check_steps(cls, steps: str) -> str:
        height = 0
        for index, step in enumerate(steps):
            if step == "U":
                height += 1
            elif step == "R":
                height -= 1
            else:
                raise InvalidDyckPath(
                    f"Unknown step '{step}' at position {index}.",
                    {"position": index},
                )
            if height < 0:
                raise InvalidDyckPath(
                    f"Path '{steps}' crosses the diagonal at step {index}.",
                    {"position": index},
                )
        if height:
            raise InvalidDyckPath(
                f"Path '{steps}' does not end on the diagonal."
            )
        return steps

    @classmethod
    def parse(cls, text: str) -> DyckPath:
        return cls(steps=text.strip().upper())

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def reflect(self) -> DyckPath:
        """Mirror image in the line ``x + y = n``."""
        swap = {"U": "R", "R": "U"}
        return DyckPath(steps="".join(swap[s] for s in reversed(self.steps)))

    def __str__(self) -> str:
        return self.steps


class Tunnel(FrozenModel):
    """The up-step and right-step joined by one diagonal segment."""

    up_index: int = Field(ge=0)
    right_index: int = Field(ge=0)

    def nested_in(self, other: Tunnel) -> bool:
        return (
            other.up_index < self.up_index
            and self.right_index < other.right_index
        )

    def precedes(self, other: Tunnel) -> bool:
        return self.right_index < other.up_index


def tunnels(p: DyckPath) -> list[Tunnel]:
    """Tunnels by matched-parenthesis pairing, ordered by up-step."""
    open_steps: list[int] = []
    found: list[Tunnel] = []
    for index, step in enumerate(p.steps):
        if step == "U":
            open_steps.append(index)
        else:
            found.append(
                Tunnel(up_index=open_steps.pop(), right_index=index)
            )
    return sorted(found, key=lambda t: t.up_index)


class DyckStats(FrozenModel):
    asc: int = Field(description="Length of the initial ascent.")
    des: int = Field(description="Length of the final descent.")
    ret: int = Field(description="Returns to the diagonal.")
    pea: int = Field(description="Peaks, i.e. UR factors.")


def dyck_stats(p: DyckPath) -> DyckStats:
    steps = p.steps
    asc = len(steps) - len(steps.lstrip("U"))
    des = len(steps) - len(steps.rstrip("R"))
    ret = 0
    height = 0
    for step in steps:
        height += 1 if step == "U" else -1
        if step == "R" and height == 0:
            ret += 1
    return DyckStats(asc=asc, des=des, ret=ret, pea=steps.count("UR"))


def enumerate_dyck(n: int) -> Iterator[DyckPath]:
    """Every path of order ``n`` once, lexicographically with U before R."""
    if n < 0:
        raise CatalanError(f"Order must be nonnegative, got {n}.")

    def walk(prefix: str, ups: int, rights: int) -> Iterator[str]:
        if ups == n and rights == n:
            yield prefix
            return
        if ups < n:
            yield from walk(prefix + "U", ups + 1, rights)
        if rights < ups:
            yield from walk(prefix + "R", ups, rights + 1)

    for steps in walk("", 0, 0):
        yield DyckPath(steps=steps)
