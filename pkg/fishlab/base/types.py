"""Common type definitions for fishlab."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel
from pydantic import ConfigDict as PydanticConfigDict

Cell = tuple[int, int]


class FrozenModel(BaseModel):
    """Immutable, hashable value type with extra fields forbidden."""

    model_config = PydanticConfigDict(extra="forbid", frozen=True)


class PatternId(str, Enum):
    """The three 4-element posets used as forbidden patterns."""

    two_plus_two = "2+2"
    three_plus_one = "3+1"
    n = "N"


class CellPosition(str, Enum):
    """Position of a cell relative to another on-or-above-diagonal cell."""

    greater = "Greater"
    smaller = "Smaller"
    north = "North"
    south = "South"
    east = "East"
    west = "West"
    strict_ne = "StrictNE"
    strict_nw = "StrictNW"
    strict_se = "StrictSE"
    strict_sw = "StrictSW"
    equal = "Equal"


class ExtremeKind(str, Enum):
    """Kinds of extreme cells of a Fishburn matrix."""

    wne = "wNE"
    sne = "sNE"
    sse = "sSE"
    wse = "wSE"


class Avoidance(str, Enum):
    """Filters on pairs of nonzero cells in a strict diagonal position."""

    none = "none"
    nw = "nw"
    sw = "sw"


class OutputFormat(str, Enum):
    """Output formats understood by the command line."""

    text = "text"
    json = "json"
    csv = "csv"


class ObjectKind(str, Enum):
    """Families whose statistics can be tabulated."""

    matrices = "matrices"
    dyck = "dyck"
    perms = "perms"
