"""Dyck paths, Catalan pairs of both types and the bijection psi."""

from fishlab.catalan.dyck import (
    DyckPath,
    DyckStats,
    InvalidDyckPath,
    Tunnel,
    dyck_stats,
    enumerate_dyck,
    tunnels,
)
from fishlab.catalan.numbers import (
    OutOfRange,
    ballot_count,
    catalan_number,
    motzkin_number,
    narayana,
)
from fishlab.catalan.pairs import (
    NotC1Pair,
    NotC2Pair,
    c1_of_dyck,
    c2_of_dyck,
    psi,
    square_above,
)

__all__ = [
    "DyckPath",
    "DyckStats",
    "InvalidDyckPath",
    "NotC1Pair",
    "NotC2Pair",
    "OutOfRange",
    "Tunnel",
    "ballot_count",
    "c1_of_dyck",
    "c2_of_dyck",
    "catalan_number",
    "dyck_stats",
    "enumerate_dyck",
    "motzkin_number",
    "narayana",
    "psi",
    "square_above",
    "tunnels",
]
