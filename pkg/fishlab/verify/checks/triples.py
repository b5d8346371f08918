"""Checks on Fishburn triples and the involution phi."""

from __future__ import annotations

import itertools

from fishlab.base.tables import Distribution
from fishlab.base.types import Avoidance, CellPosition
from fishlab.matrices.cells import WEAKLY_NW, WEAKLY_SW, cell_position
from fishlab.matrices.enumerate import enumerate_matrices, passes
from fishlab.matrices.extreme import matrix_stats
from fishlab.matrices.model import FishburnMatrix
from fishlab.matrices.orders import order_to_matrix
from fishlab.matrices.transpose import antidiagonal_transpose
from fishlab.relations.canonical import canonical_form
from fishlab.relations.model import RelStructure, mmax, mmin
from fishlab.triples.axioms import check_c1_pair, check_c2_pair
from fishlab.triples.involution import phi_stats
from fishlab.triples.model import (
    FTriple,
    f1_triple,
    f2_triple,
    triple_stats,
    trivial_involution,
)
from fishlab.verify.registry import check
from fishlab.verify.report import (
    Outcome,
    SuiteParams,
    fail,
    matrix_payload,
    ok,
)

BUILDERS = (f1_triple, f2_triple)


def _matrices(max_weight: int) -> list[FishburnMatrix]:
    return [
        m for w in range(1, max_weight + 1) for m in enumerate_matrices(w)
    ]


@check("triples.axioms")
def axioms(params: SuiteParams) -> Outcome:
    for m in _matrices(params.capped(6)):
        for build in BUILDERS:
            violation = build(m).check()
            if violation is not None:
                return fail(
                    f"{build.__name__}: {violation}", matrix_payload(m)
                )
    return ok()


def cell_rule_violation(t: FTriple) -> str | None:
    """The first pair of elements in distinct cells whose T/S membership
    contradicts the relative position of the cells."""
    for x, y in itertools.permutations(range(t.base.n), 2):
        cx, cy = t.cells[x], t.cells[y]
        if cx == cy:
            continue
        position = cell_position(cx, cy)
        if position == CellPosition.strict_sw and not t.s.has(x, y):
            return f"strictly SW pair ({x},{y}) is not in S"
        if position == CellPosition.strict_nw and not t.t.has(x, y):
            return f"strictly NW pair ({x},{y}) is not in T"
        if t.s.has(x, y) and position not in WEAKLY_SW:
            return f"S-pair ({x},{y}) is not weakly SW"
        if t.t.has(x, y) and position not in WEAKLY_NW:
            return f"T-pair ({x},{y}) is not weakly NW"
    return None


@check("triples.cell_rules")
def cell_rules(params: SuiteParams) -> Outcome:
    """R is the interval order of the matrix and T, S follow the cells."""
    for m in _matrices(params.capped(6)):
        for build in BUILDERS:
            t = build(m)
            if order_to_matrix(t.r) != m:
                return fail(
                    "R is not the order of the matrix", matrix_payload(m)
                )
            problem = cell_rule_violation(t)
            if problem is not None:
                return fail(
                    f"{build.__name__}: {problem}", matrix_payload(m)
                )
    return ok()


def c1_clause_violation(t: FTriple) -> str | None:
    """S is a chain inside each cell, holds between weakly SW cells and
    nowhere else."""
    for x, y in itertools.permutations(range(t.base.n), 2):
        cx, cy = t.cells[x], t.cells[y]
        comparable = t.s.comparable(x, y)
        if cx == cy:
            if not comparable:
                return f"elements {x},{y} of one cell are not S-comparable"
        elif cell_position(cx, cy) in WEAKLY_SW:
            if not t.s.has(x, y):
                return f"weakly SW pair ({x},{y}) is not in S"
        elif cell_position(cy, cx) not in WEAKLY_SW and comparable:
            return f"pair ({x},{y}) is S-comparable without a reason"
    return None


@check("triples.catalan_pairs")
def catalan_pairs(params: SuiteParams) -> Outcome:
    """NW-free matrices give C1-pairs (S1, R), SW-free ones C2-pairs
    (T2, R)."""
    for n in range(1, params.capped(6) + 1):
        for m in enumerate_matrices(n, avoid=Avoidance.nw):
            t = f1_triple(m)
            if not t.t.is_empty():
                return fail("T1 of an NW-free matrix", matrix_payload(m))
            violation = check_c1_pair(RelStructure.of(t.s, t.r))
            problem = c1_clause_violation(t)
            if violation is not None or problem is not None:
                return fail(str(violation or problem), matrix_payload(m))
        for m in enumerate_matrices(n, avoid=Avoidance.sw):
            t = f2_triple(m)
            if not t.s.is_empty():
                return fail("S2 of an SW-free matrix", matrix_payload(m))
            violation = check_c2_pair(RelStructure.of(t.t, t.r))
            if violation is not None:
                return fail(str(violation), matrix_payload(m))
    return ok()


@check("triples.extreme_cells")
def extreme_statistics(params: SuiteParams) -> Outcome:
    """Component maxima of both triples are extreme-cell statistics."""
    for m in _matrices(params.capped(6)):
        st = matrix_stats(m)
        one = triple_stats(f1_triple(m))
        two = triple_stats(f2_triple(m))
        expected = (st.wne, st.sne_weight, st.sse_weight, st.wse)
        if (one.max_s, two.max_s, one.max_t, two.max_t) != expected:
            return fail(
                "Triple maxima differ from extreme cells", matrix_payload(m)
            )
        if (one.max_r, one.min_r) != (st.lc, st.first_row):
            return fail("R maxima/minima differ", matrix_payload(m))
    return ok()


@check("triples.trivial_involution")
def trivial(params: SuiteParams) -> Outcome:
    """Inverting T and R is an involution that realises the transpose."""
    for m in _matrices(params.capped(5)):
        transposed = antidiagonal_transpose(m)
        for build in BUILDERS:
            t = build(m)
            image = trivial_involution(t)
            if image.check() is not None:
                return fail("Image is not a triple", matrix_payload(m))
            if trivial_involution(image) != t:
                return fail("Not an involution", matrix_payload(m))
            if canonical_form(image.base) != canonical_form(
                build(transposed).base
            ):
                return fail(
                    f"Image is not {build.__name__} of the transpose",
                    matrix_payload(m),
                )
            if mmin(t.t) != mmax(image.t):
                return fail(
                    "mmin T is not mmax of the image", matrix_payload(m)
                )
    return ok()


@check("triples.phi")
def phi_check(params: SuiteParams) -> Outcome:
    """phi is an involution exchanging the NE and SE statistics."""
    for n in range(1, params.max_weight + 1):
        for m in enumerate_matrices(n):
            result = phi_stats(m, params.phi)
            image, a, b = result.image, result.source_stats, result.image_stats
            if params.phi(image) != m:
                return fail(
                    f"phi is not an involution at weight {n}",
                    {"matrix": matrix_payload(m), "weight": n},
                )
            if not result.statistics_exchanged:
                return fail(
                    "phi did not exchange statistics", matrix_payload(m)
                )
            if a.wne_weight != b.wse_weight or a.sne != b.sse:
                return fail(
                    "phi did not exchange cell counts", matrix_payload(m)
                )
            if image.k != m.k or image.is_primitive() != m.is_primitive():
                return fail(
                    "phi changed dimension or primitivity", matrix_payload(m)
                )
    return ok()


@check("triples.phi_triples")
def phi_triples(params: SuiteParams) -> Outcome:
    """Triple form: maxS1 and maxT2 trade places, as do maxS2 and maxT1."""
    for m in _matrices(params.capped(6)):
        image = params.phi(m)
        one, two = triple_stats(f1_triple(m)), triple_stats(f2_triple(m))
        one_image = triple_stats(f1_triple(image))
        two_image = triple_stats(f2_triple(image))
        if (
            one.max_s != two_image.max_t
            or two.max_s != one_image.max_t
            or one.max_r != one_image.max_r
        ):
            return fail("Triple statistics not exchanged", matrix_payload(m))
    return ok()


@check("triples.phi_catalan")
def phi_catalan(params: SuiteParams) -> Outcome:
    """On NW-free matrices phi lands on SW-free ones and maps the C1-pair
    statistics to the C2-pair statistics."""
    for n in range(1, params.capped(6) + 1):
        for m in enumerate_matrices(n, avoid=Avoidance.nw):
            image = params.phi(m)
            if not passes(image, Avoidance.sw):
                return fail("Image is not SW-free", matrix_payload(m))
            one, two = f1_triple(m), f2_triple(image)
            if mmax(one.s) != mmax(two.t) or mmax(one.r) != mmax(two.r):
                return fail("Catalan statistics differ", matrix_payload(m))
    return ok()


@check("triples.ne_lc_symmetry")
def ne_lc_symmetry(params: SuiteParams) -> Outcome:
    """(wNE cells, last column weight) is symmetric at every weight."""
    for n in range(1, params.max_weight + 1):
        table = Distribution.tally(
            ("wne", "lc"),
            ((s.wne, s.lc) for s in map(matrix_stats, enumerate_matrices(n))),
        )
        if not table.is_symmetric():
            return fail(f"Not symmetric at weight {n}", table.model_dump())
    return ok()
