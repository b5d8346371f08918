"""
Text input helpers shared by the relation, matrix and permutation readers.

Sources are opened through fsspec, so local paths and URIs such as
``s3://bucket/orders.txt`` or ``memory://x.txt`` are accepted alike.
Blank lines and ``#`` comments are skipped by ``data_lines``.
"""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

import fsspec

from fishlab.base.exceptions import LoadError


def read_source(path: str | Path) -> str:
    """Read a whole text file from a path or URI.

    Raises:
        LoadError: If the source cannot be opened.
    """
    source = str(path)
    try:
        with fsspec.open(source, "r", encoding="utf-8") as f:
            return f.read()  # type: ignore[no-any-return]
    except (FileNotFoundError, IOError, OSError) as e:
        raise LoadError(f"Cannot read input: {e}", source=source) from e


def data_lines(content: str) -> Iterator[tuple[int, list[str]]]:
    """Yield ``(line_number, tokens)`` for every non-empty line."""
    for number, raw in enumerate(content.splitlines(), start=1):
        text = raw.split("#", 1)[0].strip()
        if text:
            yield number, text.split()


def parse_ints(
    tokens: list[str], line: int, source: str | None
) -> list[int]:
    """Convert tokens to integers, reporting the offending line."""
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise LoadError(
            f"Expected integers, got '{' '.join(tokens)}'",
            line=line,
            source=source,
        ) from None
