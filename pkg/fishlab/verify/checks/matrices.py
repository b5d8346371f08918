"""Checks on Fishburn matrices, their orders and their generation."""

from __future__ import annotations

import logging
from collections import Counter

from fishlab.base.types import (
    Avoidance,
    Cell,
    CellPosition,
    ExtremeKind,
    PatternId,
)
from fishlab.catalan.numbers import catalan_number, motzkin_number
from fishlab.matrices.enumerate import (
    count_matrices,
    enumerate_matrices,
    enumerate_primitive,
    has_pair,
)
from fishlab.matrices.extension import (
    build,
    code_sequence,
    decompose,
    deflate,
    extend,
    inflate,
    valid_codes,
)
from fishlab.matrices.extreme import (
    extreme_cells,
    longest_chain,
    matrix_stats,
)
from fishlab.matrices.model import FishburnMatrix
from fishlab.matrices.orders import matrix_to_order, order_to_matrix
from fishlab.matrices.transpose import antidiagonal_transpose
from fishlab.relations.canonical import canonical_form
from fishlab.relations.model import RelStructure, indistinguishable, minmax
from fishlab.relations.patterns import avoids
from fishlab.verify.registry import check
from fishlab.verify.report import (
    FISHBURN_NUMBERS,
    Outcome,
    SuiteParams,
    fail,
    flag,
    matrix_payload,
    ok,
)

logger = logging.getLogger(__name__)

Kinds = dict[Cell, frozenset[ExtremeKind]]


def _by_weight(max_weight: int) -> list[FishburnMatrix]:
    return [
        m for w in range(1, max_weight + 1) for m in enumerate_matrices(w)
    ]


@check("matrices.fishburn_counts")
def fishburn_counts(params: SuiteParams) -> Outcome:
    for n in range(1, params.max_weight + 1):
        count = count_matrices(n)
        if count != FISHBURN_NUMBERS[n - 1]:
            return fail(
                f"Weight {n}: {count} matrices, "
                f"expected {FISHBURN_NUMBERS[n - 1]}",
                {"weight": n, "count": count},
            )
    return ok()


@check("matrices.bijection")
def bijection(params: SuiteParams) -> Outcome:
    """Matrices are distinct, encode pairwise non-isomorphic interval
    orders, and convert back exactly."""
    for n in range(1, params.max_weight + 1):
        matrices = list(enumerate_matrices(n))
        if len(set(matrices)) != len(matrices):
            return fail(f"Duplicate matrices at weight {n}")
        seen: dict[bytes, FishburnMatrix] = {}
        for m in matrices:
            order = matrix_to_order(m).poset
            key = canonical_form(order)
            if key in seen:
                return fail(
                    "Two matrices encode isomorphic orders",
                    [matrix_payload(seen[key]), matrix_payload(m)],
                )
            seen[key] = m
            mirrored = order.relabel(list(reversed(range(order.n))))
            if order_to_matrix(mirrored) != m:
                return fail("Round trip changed the matrix", matrix_payload(m))
    return ok()


@check("matrices.swse_patterns")
def swse_patterns(params: SuiteParams) -> Outcome:
    """3+1 occurs iff two cells are strictly SW, N iff strictly NW."""
    for m in _by_weight(params.capped(6)):
        order = matrix_to_order(m).poset
        if avoids(order, PatternId.three_plus_one) == has_pair(
            m, CellPosition.strict_sw
        ):
            return fail("3+1 does not match StrictSW", matrix_payload(m))
        if avoids(order, PatternId.n) == has_pair(m, CellPosition.strict_nw):
            return fail("N does not match StrictNW", matrix_payload(m))
    return ok()


@check("matrices.order_facts")
def order_facts(params: SuiteParams) -> Outcome:
    """Size, extremal elements and indistinguishability read off cells."""
    for m in _by_weight(params.capped(6)):
        order = matrix_to_order(m)
        r = order.relation
        minimal, maximal = minmax(r)
        if r.n != m.weight:
            return fail("Order size differs from weight", matrix_payload(m))
        if len(minimal) != m.first_row_weight or len(maximal) != m.lc:
            return fail(
                "Minimal/maximal counts differ from first row/last column",
                matrix_payload(m),
            )
        for x in range(r.n):
            for y in range(x + 1, r.n):
                same_cell = order.cells[x] == order.cells[y]
                if indistinguishable(r, x, y) != same_cell:
                    return fail(
                        f"Elements {x},{y}: indistinguishability differs "
                        "from sharing a cell",
                        matrix_payload(m),
                    )
    return ok()


@check("matrices.extension_calculus")
def extension_calculus(params: SuiteParams) -> Outcome:
    """Extensions are undone by decompose, and every primitive matrix has
    a single code sequence."""
    for k in range(1, 5):
        for p in enumerate_primitive(dimension=k):
            for code in valid_codes(p.lc):
                if decompose(extend(p, code)) != (p, code):
                    return fail(
                        f"decompose(extend(p, {code})) differs",
                        matrix_payload(p),
                    )
    for k in range(1, 6):
        sequences: set[tuple[str, ...]] = set()
        for p in enumerate_primitive(dimension=k):
            codes = code_sequence(p)
            words = tuple(str(code) for code in codes)
            if len(codes) != k - 1 or words in sequences:
                return fail("Code sequence is not unique", matrix_payload(p))
            sequences.add(words)
            if build(codes) != p:
                return fail("Rebuilding changed the matrix", matrix_payload(p))
        logger.debug(f"{len(sequences)} primitive matrices of dimension {k}")
    return ok()


def _kinds(m: FishburnMatrix) -> Kinds:
    found: dict[Cell, set[ExtremeKind]] = {
        cell: set() for cell in m.nonzero_cells()
    }
    for kind in ExtremeKind:
        for cell in extreme_cells(m, kind):
            found[cell].add(kind)
    return {cell: frozenset(kinds) for cell, kinds in found.items()}


def predicted_kinds(
    parent: FishburnMatrix, word: str, child: FishburnMatrix
) -> Kinds:
    """Extreme kinds of the child's cells from the parent and the code."""
    k = parent.k
    before = _kinds(parent)
    last_rows = [i for i, _ in parent.column_cells(k)]
    new_column = child.column_cells(k + 1)
    predicted: Kinds = {}
    for cell in child.nonzero_cells():
        row, j = cell
        if j < k:
            predicted[cell] = before[cell]
            continue
        kinds: set[ExtremeKind] = set()
        if j == k:
            i = last_rows.index(row)
            if i == 0 and word[0] == "I":
                kinds.add(ExtremeKind.wne)
            if i == len(word) - 1 and word[-1] == "I":
                kinds.add(ExtremeKind.wse)
            if set(word[:i]) <= {"I"}:
                kinds.add(ExtremeKind.sne)
            if set(word[i + 1 :]) <= {"I"}:
                kinds.add(ExtremeKind.sse)
        else:
            kinds.update((ExtremeKind.sne, ExtremeKind.sse))
            if cell == new_column[0]:
                kinds.add(ExtremeKind.wne)
            if cell == new_column[-1]:
                kinds.add(ExtremeKind.wse)
        predicted[cell] = frozenset(kinds)
    return predicted


@check("matrices.extension_extremes")
def extension_extremes(params: SuiteParams) -> Outcome:
    """Extreme cells of an extension follow from the parent and code."""
    for k in range(1, 5):
        for p in enumerate_primitive(dimension=k):
            for code in valid_codes(p.lc):
                child = extend(p, code)
                if _kinds(child) != predicted_kinds(p, code.word, child):
                    return fail(
                        f"Extreme cells after code {code} differ",
                        matrix_payload(p),
                    )
    return ok()


@check("matrices.weak_within_strict")
def weak_within_strict(params: SuiteParams) -> Outcome:
    pairs = (
        (ExtremeKind.wne, ExtremeKind.sne),
        (ExtremeKind.wse, ExtremeKind.sse),
    )
    for m in _by_weight(params.capped(6)):
        if any(
            not extreme_cells(m, weak) <= extreme_cells(m, strong)
            for weak, strong in pairs
        ):
            return fail("A weak extreme cell is not strict", matrix_payload(m))
    return ok()


@check("matrices.transpose")
def transpose(params: SuiteParams) -> Outcome:
    """The antidiagonal transpose is an involution dual to the order."""
    for m in _by_weight(params.capped(6)):
        image = antidiagonal_transpose(m)
        a, b = matrix_stats(m), matrix_stats(image)
        if antidiagonal_transpose(image) != m:
            return fail("Transpose is not an involution", matrix_payload(m))
        if (
            a.wne != b.wne
            or a.sne_weight != b.sne_weight
            or a.first_row != b.lc
            or a.lc != b.first_row
            or a.diagonal != b.diagonal
        ):
            return fail("Transpose changed a statistic", matrix_payload(m))
        for position in (CellPosition.strict_nw, CellPosition.strict_sw):
            if has_pair(m, position) != has_pair(image, position):
                return fail(
                    f"Transpose changed {position.value}-freeness",
                    matrix_payload(m),
                )
        if m.weight <= 5:
            dual = RelStructure.of(matrix_to_order(m).relation.inverse())
            if canonical_form(dual) != canonical_form(
                matrix_to_order(image).poset
            ):
                return fail(
                    "Transpose is not the dual order", matrix_payload(m)
                )
    return ok()


@check("matrices.catalan_restrictions")
def catalan_restrictions(params: SuiteParams) -> Outcome:
    for n in range(1, params.max_weight + 1):
        for avoid in (Avoidance.nw, Avoidance.sw):
            count = count_matrices(n, avoid=avoid)
            if count != catalan_number(n):
                return fail(
                    f"{count} {avoid.value}-free matrices of weight {n}, "
                    f"expected {catalan_number(n)}"
                )
    return ok()


@check("matrices.motzkin_restrictions")
def motzkin_restrictions(params: SuiteParams) -> Outcome:
    for n in range(1, params.max_weight + 1):
        for avoid in (Avoidance.nw, Avoidance.sw):
            count = count_matrices(n, primitive_only=True, avoid=avoid)
            if count != motzkin_number(n - 1):
                return fail(
                    f"{count} primitive {avoid.value}-free matrices of "
                    f"weight {n}, expected {motzkin_number(n - 1)}"
                )
    return ok()


@check("matrices.inflation_roundtrip")
def inflation_roundtrip(params: SuiteParams) -> Outcome:
    for m in _by_weight(params.capped(5)):
        if inflate(*deflate(m)) != m:
            return fail("inflate(deflate(m)) != m", matrix_payload(m))
    return ok()


def _chain_profile(
    weight: int, direction: str, length: int
) -> Counter[tuple[object, ...]]:
    return Counter(
        (m.k, m.row_weights(), m.column_weights())
        for m in enumerate_matrices(weight)
        if longest_chain(m, direction) < length
    )


@check("matrices.chain_equidistribution")
def chain_equidistribution(params: SuiteParams) -> Outcome:
    """Avoiding increasing or decreasing chains of a fixed length gives the
    same dimension and row/column weight profile. Only flagged."""
    for length in (2, 3):
        for n in range(1, params.capped(6) + 1):
            increasing = _chain_profile(n, "increasing", length)
            decreasing = _chain_profile(n, "decreasing", length)
            if increasing != decreasing:
                return flag(
                    f"Chain length {length}, weight {n}: profiles differ",
                    {"length": length, "weight": n},
                )
    return ok()
