"""Tests for F1- and F2-triples of a matrix."""

from __future__ import annotations

import pytest

from fishlab.base.types import Avoidance
from fishlab.matrices.enumerate import enumerate_matrices
from fishlab.matrices.model import validate
from fishlab.matrices.transpose import antidiagonal_transpose
from fishlab.relations.canonical import canonical_form
from fishlab.relations.model import Relation, RelStructure
from fishlab.triples.axioms import WrongComponentCount, is_c1_pair
from fishlab.triples.model import (
    FTriple,
    f1_triple,
    f2_triple,
    triple_stats,
    trivial_involution,
)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_single_cell(n: int) -> None:
    chain = Relation.from_pairs(
        n, [(a, b) for a in range(n) for b in range(a + 1, n)]
    )
    one, two = f1_triple(validate([[n]])), f2_triple(validate([[n]]))
    empty = Relation.empty(n)
    assert (one.t, one.s, one.r) == (empty, chain, empty)
    assert (two.t, two.s) == (chain, empty)


def test_strictly_nw_pair_lands_in_t1(sample_matrix) -> None:
    t = f1_triple(sample_matrix)
    assert t.cells == ((1, 1), (1, 2), (2, 3), (3, 3))
    assert t.t.pairs() == [(1, 2)]


@pytest.mark.parametrize("n", range(1, 6))
def test_triples_satisfy_axioms(n: int) -> None:
    for m in enumerate_matrices(n):
        assert f1_triple(m).check() is None
        assert f2_triple(m).check() is None


def test_nw_free_gives_c1_pair() -> None:
    for m in enumerate_matrices(5, avoid=Avoidance.nw):
        t = f1_triple(m)
        assert t.t.is_empty()
        assert is_c1_pair(RelStructure.of(t.s, t.r))


def test_sw_free_gives_empty_s2() -> None:
    for m in enumerate_matrices(5, avoid=Avoidance.sw):
        assert f2_triple(m).s.is_empty()


def test_trivial_involution(sample_matrix) -> None:
    one = f1_triple(sample_matrix)
    image = trivial_involution(one)
    assert image.check() is None
    assert trivial_involution(image) == one


def test_trivial_involution_fixes_s_only_triple() -> None:
    t = f1_triple(validate([[3]]))
    assert trivial_involution(t) == t


def test_trivial_involution_realises_transpose() -> None:
    for n in range(1, 5):
        for m in enumerate_matrices(n):
            image = trivial_involution(f1_triple(m))
            expected = f1_triple(antidiagonal_transpose(m))
            assert canonical_form(image.base) == canonical_form(expected.base)


def test_triple_stats(sample_matrix) -> None:
    stats = triple_stats(f1_triple(sample_matrix))
    # R is the order of the matrix: maxima are the last column,
    # minima the first row
    assert (stats.max_r, stats.min_r) == (2, 2)
    assert stats.max_s == 2


def test_needs_three_components() -> None:
    pair = RelStructure.of(Relation.empty(1), Relation.empty(1))
    with pytest.raises(WrongComponentCount):
        FTriple(base=pair, cells=((1, 1),))
