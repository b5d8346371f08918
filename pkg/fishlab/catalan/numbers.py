"""Closed-form counts for Catalan, Narayana, ballot and Motzkin numbers."""

from __future__ import annotations

from math import comb

from fishlab.base.exceptions import CatalanError


class OutOfRange(CatalanError):
    def __init__(self, what: str, n: int, k: int) -> None:
        super().__init__(
            f"{what}({n}, {k}) needs 1 <= k <= n.", {"n": n, "k": k}
        )


def catalan_number(n: int) -> int:
    if n < 0:
        raise CatalanError(f"Catalan number of negative order {n}.")
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """Paths of order ``n`` with ``k`` peaks."""
    if not 1 <= k <= n:
        raise OutOfRange("narayana", n, k)
    return comb(n - 1, k - 1) * comb(n, k - 1) // k


def ballot_count(n: int, k: int) -> int:
    """Paths of order ``n`` with initial ascent (or returns) equal to ``k``."""
    if not 1 <= k <= n:
        raise OutOfRange("ballot_count", n, k)
    return k * comb(2 * n - k, n) // (2 * n - k)


def motzkin_number(n: int) -> int:
    if n < 0:
        raise CatalanError(f"Motzkin number of negative order {n}.")
    return sum(comb(n, 2 * k) * catalan_number(k) for k in range(n // 2 + 1))
