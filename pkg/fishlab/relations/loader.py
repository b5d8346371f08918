"""
Reading and writing relational structures in the plain text format.

The format is a header line ``n k`` followed by ``k`` blocks. Each block
starts with a line ``m [name]`` and continues with ``m`` lines ``a b``, one
per ordered pair of the component::

    3 2
    1 S
    0 1
    1 R
    2 1
"""

from __future__ import annotations

from pathlib import Path

from fishlab.base.exceptions import LoadError, RelationError
from fishlab.base.loading import data_lines, parse_ints, read_source
from fishlab.relations.model import Relation, RelStructure


def parse_structure(content: str, source: str | None = None) -> RelStructure:
    """Parse a structure from text.

    Raises:
        LoadError: If the text is malformed or describes an invalid relation.
    """
    lines = list(data_lines(content))
    if not lines:
        raise LoadError("Empty relation input", source=source)

    cursor = iter(lines)
    number, tokens = next(cursor)
    header = parse_ints(tokens, number, source)
    if len(header) != 2 or header[0] < 0 or header[1] < 1:
        raise LoadError(
            "Header must be 'n k' with n >= 0 and k >= 1",
            line=number,
            source=source,
        )
    n, k = header

    components: list[Relation] = []
    names: list[str] = []
    for _ in range(k):
        try:
            number, tokens = next(cursor)
        except StopIteration:
            raise LoadError(
                f"Expected {k} component blocks, found {len(components)}",
                source=source,
            ) from None
        (m,) = parse_ints(tokens[:1], number, source)
        if m < 0:
            raise LoadError(
                "Pair count must be nonnegative", line=number, source=source
            )
        if len(tokens) > 1:
            names.append(tokens[1])

        pairs: list[tuple[int, int]] = []
        for _ in range(m):
            try:
                number, tokens = next(cursor)
            except StopIteration:
                raise LoadError(
                    f"Component {len(components)} declares {m} pairs, "
                    f"found {len(pairs)}",
                    source=source,
                ) from None
            pair = parse_ints(tokens, number, source)
            if len(pair) != 2:
                raise LoadError(
                    "Pair lines must be 'a b'", line=number, source=source
                )
            pairs.append((pair[0], pair[1]))
        try:
            components.append(Relation.from_pairs(n, pairs))
        except RelationError as e:
            raise LoadError(e.message, line=number, source=source) from e

    leftover = next(cursor, None)
    if leftover is not None:
        raise LoadError(
            "Unexpected trailing content", line=leftover[0], source=source
        )
    if names and len(names) != k:
        raise LoadError(
            "Either every component block is named or none is",
            source=source,
        )
    return RelStructure(n=n, components=tuple(components), names=tuple(names))


def load_structure(path: str | Path) -> RelStructure:
    """Load a structure from a file path or URI."""
    source = str(path)
    return parse_structure(read_source(source), source=source)


def dump_structure(s: RelStructure) -> str:
    """Render a structure in the text format accepted by parse_structure."""
    out = [f"{s.n} {s.k}"]
    for i, comp in enumerate(s.components):
        pairs = comp.pairs()
        head = f"{len(pairs)}"
        if s.names:
            head += f" {s.names[i]}"
        out.append(head)
        out.extend(f"{a} {b}" for a, b in pairs)
    return "\n".join(out) + "\n"
