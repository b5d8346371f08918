"""Relations on 0..n-1 stored as per-element bitsets."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from pydantic import Field, model_validator

from fishlab.base.exceptions import RelationError
from fishlab.base.types import FrozenModel


class Relation(FrozenModel):
    """An irreflexive binary relation on the ground set ``0..n-1``.

    Bit ``b`` of ``rows[a]`` is set iff the pair ``(a, b)`` belongs to the
    relation.
    """

    n: int = Field(ge=0)
    rows: tuple[int, ...]

    @model_validator(mode="after")
    def _check_rows(self) -> Relation:
        if len(self.rows) != self.n:
            raise RelationError(
                f"Relation on {self.n} elements needs {self.n} rows, "
                f"got {len(self.rows)}."
            )
        full = (1 << self.n) - 1
        for a, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise RelationError(
                    f"Row {a} refers to elements outside [0, {self.n}).",
                    {"row": a},
                )
            if row >> a & 1:
                raise RelationError(
                    f"Relation is not irreflexive: ({a},{a}) present.",
                    {"element": a},
                )
        return self

    @classmethod
    def from_pairs(
        cls, n: int, pairs: Iterable[tuple[int, int]]
    ) -> Relation:
        """Build a relation from ordered pairs."""
        rows = [0] * n
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise RelationError(
                    f"Pair ({a},{b}) is outside [0, {n}).",
                    {"pair": (a, b)},
                )
            if a == b:
                raise RelationError(
                    f"Relation is not irreflexive: ({a},{a}) present.",
                    {"element": a},
                )
            rows[a] |= 1 << b
        return cls(n=n, rows=tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Relation:
        return cls(n=n, rows=(0,) * n)

    def has(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def successors(self, a: int) -> list[int]:
        row = self.rows[a]
        return [b for b in range(self.n) if row >> b & 1]

    def predecessors(self, b: int) -> list[int]:
        return [a for a in range(self.n) if self.rows[a] >> b & 1]

    def column(self, b: int) -> int:
        """Bitset of the elements related to ``b``."""
        col = 0
        for a, row in enumerate(self.rows):
            if row >> b & 1:
                col |= 1 << a
        return col

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in self.successors(a)]

    def size(self) -> int:
        """Number of pairs in the relation."""
        return sum(row.bit_count() for row in self.rows)

    def is_empty(self) -> bool:
        return not any(self.rows)

    def comparable(self, a: int, b: int) -> bool:
        return self.has(a, b) or self.has(b, a)

    def inverse(self) -> Relation:
        return Relation(
            n=self.n, rows=tuple(self.column(b) for b in range(self.n))
        )

    def union(self, other: Relation) -> Relation:
        if other.n != self.n:
            raise RelationError(
                f"Cannot unite relations on {self.n} and {other.n} elements."
            )
        return Relation(
            n=self.n,
            rows=tuple(r | s for r, s in zip(self.rows, other.rows)),
        )

    def relabel(self, image: Sequence[int]) -> Relation:
        """Rename every element ``a`` to ``image[a]``."""
        rows = [0] * self.n
        for a, b in self.pairs():
            rows[image[a]] |= 1 << image[b]
        return Relation(n=self.n, rows=tuple(rows))

    def restrict(self, elements: Sequence[int]) -> Relation:
        """Induced relation on ``elements``, renumbered in the given order."""
        rows = []
        for a in elements:
            row = 0
            for j, b in enumerate(elements):
                if self.has(a, b):
                    row |= 1 << j
            rows.append(row)
        return Relation(n=len(elements), rows=tuple(rows))

    def is_transitive(self) -> bool:
        for a in range(self.n):
            reach = 0
            for b in self.successors(a):
                reach |= self.rows[b]
            # (a,b),(b,a) would force the forbidden pair (a,a)
            if reach & ~self.rows[a]:
                return False
        return True

    def is_linear_order(self) -> bool:
        """True iff the relation is a strict total order."""
        if not self.is_transitive():
            return False
        return all(
            self.comparable(a, b)
            for a in range(self.n)
            for b in range(a + 1, self.n)
        )


class RelStructure(FrozenModel):
    """An ordered tuple of relations sharing one ground set."""

    n: int = Field(ge=0)
    components: tuple[Relation, ...]
    names: tuple[str, ...] = ()

    @model_validator(mode="after")
    def _check_components(self) -> RelStructure:
        for i, comp in enumerate(self.components):
            if comp.n != self.n:
                raise RelationError(
                    f"Component {i} has ground set size {comp.n}, "
                    f"expected {self.n}.",
                    {"component": i},
                )
        if self.names and len(self.names) != len(self.components):
            raise RelationError(
                f"{len(self.names)} names given for "
                f"{len(self.components)} components."
            )
        return self

    @classmethod
    def of(
        cls, *components: Relation, names: Sequence[str] = ()
    ) -> RelStructure:
        if not components:
            raise RelationError("A structure needs at least one component.")
        return cls(
            n=components[0].n, components=tuple(components), names=tuple(names)
        )

    @property
    def k(self) -> int:
        return len(self.components)

    def component(self, name: str) -> Relation:
        try:
            return self.components[self.names.index(name)]
        except ValueError:
            raise RelationError(
                f"No component named '{name}' (have {list(self.names)})."
            ) from None

    def relabel(self, image: Sequence[int]) -> RelStructure:
        return RelStructure(
            n=self.n,
            components=tuple(c.relabel(image) for c in self.components),
            names=self.names,
        )

    def restrict(self, elements: Sequence[int]) -> RelStructure:
        return RelStructure(
            n=len(elements),
            components=tuple(c.restrict(elements) for c in self.components),
            names=self.names,
        )


def is_partial_order(r: Relation) -> bool:
    """Irreflexivity is a type invariant, so this is transitivity."""
    return r.is_transitive()


def minmax(r: Relation) -> tuple[frozenset[int], frozenset[int]]:
    """Minimal and maximal elements of an arbitrary relation."""
    has_pred = 0
    for row in r.rows:
        has_pred |= row
    minimal = frozenset(x for x in range(r.n) if not has_pred >> x & 1)
    maximal = frozenset(x for x in range(r.n) if not r.rows[x])
    return minimal, maximal


def mmin(r: Relation) -> int:
    return len(minmax(r)[0])


def mmax(r: Relation) -> int:
    return len(minmax(r)[1])


def indistinguishable(r: Relation, x: int, y: int) -> bool:
    """Same strict up-set and same strict down-set."""
    return r.rows[x] == r.rows[y] and r.column(x) == r.column(y)
