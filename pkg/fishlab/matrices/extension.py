"""Extension and inflation of primitive Fishburn matrices.

Every primitive matrix of dimension ``k`` is reached from ``[1]`` by a unique
sequence of ``k - 1`` valid extensions, and every Fishburn matrix is the
inflation of a unique primitive matrix. An extension splits the last column
of its parent in two; its code has one letter per 1-cell of that column,
top to bottom:

* ``D`` duplicates the cell into both new columns,
* ``S`` shifts it into the new last column,
* ``I`` ignores it, leaving it in the penultimate column.

The new last row always holds a single 1 in the bottom-right corner.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Mapping

from pydantic import field_validator

from fishlab.base.exceptions import MatrixError
from fishlab.base.types import Cell, FrozenModel
from fishlab.matrices.model import FishburnMatrix, identity

Inflation = dict[Cell, int]

CODE_LETTERS = "DIS"
ROOT = identity(1)


class NotPrimitive(MatrixError):
    """An operation needing a 0/1 matrix received an inflated one."""

    def __init__(self, m: FishburnMatrix) -> None:
        super().__init__(
            "Matrix is not primitive.", {"rows": [list(r) for r in m.rows]}
        )


class CodeLengthMismatch(MatrixError):
    def __init__(self, expected: int, actual: int) -> None:
        super().__init__(
            f"Code of length {actual} given for a last column of weight "
            f"{expected}.",
            {"expected": expected, "actual": actual},
        )


class InvalidCode(MatrixError):
    """The code duplicates or ignores no cell."""

    pass


class NoParent(MatrixError):
    """A 1x1 matrix is not an extension of anything."""

    pass


class InflationMismatch(MatrixError):
    """Inflation values are not indexed by exactly the 1-cells."""

    pass


class ExtensionCode(FrozenModel):
    """A word over ``{D, S, I}``."""

    word: str

    @field_validator("word")
    @classmethod
    def _check_letters(cls, word: str) -> str:
        bad = set(word) - set(CODE_LETTERS)
        if bad:
            raise ValueError(f"Unknown code letters: {sorted(bad)}")
        return word

    @property
    def is_valid(self) -> bool:
        return "D" in self.word or "I" in self.word

    def reversed(self) -> ExtensionCode:
        return ExtensionCode(word=self.word[::-1])

    def __str__(self) -> str:
        return self.word


def _word(code: ExtensionCode | str) -> str:
    return code.word if isinstance(code, ExtensionCode) else code


def extend(p: FishburnMatrix, code: ExtensionCode | str) -> FishburnMatrix:
    """Apply one extension to a primitive matrix.

    Raises:
        NotPrimitive: If ``p`` has an entry above 1.
        CodeLengthMismatch: If the code length differs from ``lc(p)``.
        InvalidCode: If the code consists of ``S`` letters only.
    """
    word = _word(code)
    if not p.is_primitive():
        raise NotPrimitive(p)
    if set(word) - set(CODE_LETTERS):
        raise InvalidCode(f"Code '{word}' has letters outside D, S, I.")
    if len(word) != p.lc:
        raise CodeLengthMismatch(p.lc, len(word))
    if "D" not in word and "I" not in word:
        raise InvalidCode(
            f"Code '{word}' neither duplicates nor ignores a cell.",
            {"code": word},
        )

    k = p.k
    rows = [list(row) + [0] for row in p.rows]
    rows.append([0] * k + [1])
    last = [i for i in range(k) if p.rows[i][k - 1]]
    for i, letter in zip(last, word):
        rows[i][k - 1] = 0 if letter == "S" else 1
        rows[i][k] = 0 if letter == "I" else 1
    return FishburnMatrix(rows=tuple(tuple(row) for row in rows))


def decompose(p: FishburnMatrix) -> tuple[FishburnMatrix, ExtensionCode]:
    """The unique parent and code with ``extend(parent, code) == p``.

    Raises:
        NotPrimitive: If ``p`` has an entry above 1.
        NoParent: If ``p`` is 1x1.
    """
    if not p.is_primitive():
        raise NotPrimitive(p)
    if p.k == 1:
        raise NoParent("A 1x1 matrix has no parent.")

    k = p.k - 1
    rows = []
    letters = []
    for i in range(k):
        row = list(p.rows[i][:k])
        left, right = p.rows[i][k - 1], p.rows[i][k]
        row[k - 1] = left | right
        if left and right:
            letters.append("D")
        elif right:
            letters.append("S")
        elif left:
            letters.append("I")
        rows.append(tuple(row))
    parent = FishburnMatrix(rows=tuple(rows))
    return parent, ExtensionCode(word="".join(letters))


def code_sequence(p: FishburnMatrix) -> list[ExtensionCode]:
    """Codes of the extensions building ``p`` from ``[1]``, in order."""
    codes: list[ExtensionCode] = []
    while p.k > 1:
        p, code = decompose(p)
        codes.append(code)
    codes.reverse()
    return codes


def build(codes: list[ExtensionCode] | list[str]) -> FishburnMatrix:
    """Apply a sequence of extensions starting from ``[1]``."""
    p = ROOT
    for code in codes:
        p = extend(p, code)
    return p


def valid_codes(m: int) -> Iterator[ExtensionCode]:
    """All valid codes of length ``m`` in lexicographic order, D < I < S."""
    for letters in itertools.product(CODE_LETTERS, repeat=m):
        word = "".join(letters)
        if "D" in word or "I" in word:
            yield ExtensionCode(word=word)


def inflate(p: FishburnMatrix, values: Mapping[Cell, int]) -> FishburnMatrix:
    """Replace each 1-cell of ``p`` by its positive value.

    Raises:
        NotPrimitive: If ``p`` has an entry above 1.
        InflationMismatch: If ``values`` is not indexed by the 1-cells of
            ``p`` or holds a value below 1.
    """
    if not p.is_primitive():
        raise NotPrimitive(p)
    cells = set(p.nonzero_cells())
    if set(values) != cells:
        raise InflationMismatch(
            "Inflation must give a value for exactly the 1-cells.",
            {
                "missing": sorted(cells - set(values)),
                "extra": sorted(set(values) - cells),
            },
        )
    if any(v < 1 for v in values.values()):
        raise InflationMismatch("Inflation values must be positive.")
    rows = [list(row) for row in p.rows]
    for (i, j), v in values.items():
        rows[i - 1][j - 1] = v
    return FishburnMatrix(rows=tuple(tuple(row) for row in rows))


def deflate(m: FishburnMatrix) -> tuple[FishburnMatrix, Inflation]:
    """Split ``m`` into its primitive support and the inflation values."""
    return m.support(), {cell: m.entry(cell) for cell in m.nonzero_cells()}
