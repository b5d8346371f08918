"""Tests for the triple and pair axioms."""

from __future__ import annotations

import pytest

from fishlab.catalan.dyck import enumerate_dyck
from fishlab.catalan.pairs import c1_of_dyck, c2_of_dyck
from fishlab.relations.model import Relation, RelStructure
from fishlab.triples.axioms import (
    AxiomViolation,
    WrongComponentCount,
    check_c1_pair,
    check_f_triple,
    is_c1_pair,
    is_c2_pair,
    is_f_triple,
)

EMPTY = Relation.empty(3)


def triple(t, s, r) -> RelStructure:
    return RelStructure.of(
        Relation.from_pairs(3, t),
        Relation.from_pairs(3, s),
        Relation.from_pairs(3, r),
    )


def test_c2c_configuration() -> None:
    violation = check_f_triple(triple([(0, 1), (0, 2)], [], [(1, 2)]))
    assert violation == AxiomViolation(axiom="C2c", witness=(0, 1, 2))
    assert str(violation) == "C2c violated by (0, 1, 2)"


def test_variant_of_c2c_is_a_renaming() -> None:
    # yTx, zTx, yRz is the clause yTx, zTx, zRy with y and z swapped
    assert not is_f_triple(triple([(1, 0), (2, 0)], [], [(1, 2)]))
    assert not is_f_triple(triple([(1, 0), (2, 0)], [], [(2, 1)]))


def test_fa_checks_union_of_t_and_r() -> None:
    violation = check_f_triple(triple([(0, 1)], [], [(1, 2)]))
    assert violation is not None and violation.axiom == "Fa"


def test_fb_needs_exactly_one_relation() -> None:
    violation = check_f_triple(triple([(0, 1)], [(0, 1)], []))
    assert violation == AxiomViolation(axiom="Fb", witness=(0, 1))
    violation = check_f_triple(triple([], [(0, 1)], [(0, 2), (1, 2)]))
    assert violation is None


def test_c1c() -> None:
    # 0 S 1 and 1 R 2 force 0 R 2
    violation = check_f_triple(triple([(0, 2)], [(0, 1)], [(1, 2)]))
    assert violation is not None and violation.axiom == "C1c"


@pytest.mark.parametrize("n", range(1, 5))
def test_pairs_from_paths(n: int) -> None:
    for p in enumerate_dyck(n):
        s, r = c1_of_dyck(p).components
        t, r2 = c2_of_dyck(p).components
        assert is_c1_pair(RelStructure.of(s, r))
        assert is_c2_pair(RelStructure.of(t, r2))
        assert is_f_triple(RelStructure.of(Relation.empty(n), s, r))
        assert is_f_triple(RelStructure.of(t, Relation.empty(n), r2))


def test_wrong_component_count() -> None:
    with pytest.raises(WrongComponentCount):
        check_f_triple(RelStructure.of(EMPTY))
    with pytest.raises(WrongComponentCount):
        check_c1_pair(RelStructure.of(EMPTY, EMPTY, EMPTY))
