"""Tests for the involution phi."""

from __future__ import annotations

import pytest

from fishlab.base.types import Avoidance
from fishlab.matrices.enumerate import enumerate_matrices, passes
from fishlab.matrices.extreme import matrix_stats
from fishlab.matrices.model import validate
from fishlab.triples.involution import phi, phi_fixed_points, phi_stats

IMAGE = validate([[1, 0, 1], [0, 1, 0], [0, 0, 1]])


def test_two_by_two_is_fixed() -> None:
    pair = validate([[1, 1], [0, 1]])
    assert phi(pair) == pair


def test_reverses_codes(sample_matrix) -> None:
    assert phi(sample_matrix) == IMAGE
    assert phi(IMAGE) == sample_matrix


def test_statistics_exchanged(sample_matrix) -> None:
    result = phi_stats(sample_matrix)
    assert result.image == IMAGE
    assert result.statistics_exchanged
    assert (result.source_stats.wne, result.image_stats.wse) == (2, 2)


def test_inflation_follows_columns() -> None:
    m = validate([[2, 1, 0], [0, 0, 1], [0, 0, 3]])
    image = phi(m)
    assert image.column_weights() == m.column_weights()
    assert phi(image) == m


@pytest.mark.parametrize("n", range(1, 6))
def test_involution_exchanging_statistics(n: int) -> None:
    for m in enumerate_matrices(n):
        result = phi_stats(m)
        assert phi(result.image) == m
        assert result.statistics_exchanged
        a, b = result.source_stats, result.image_stats
        assert (a.wne, a.sne_weight) == (b.wse, b.sse_weight)
        assert matrix_stats(result.image).dimension == m.k


def test_nw_free_maps_to_sw_free() -> None:
    for m in enumerate_matrices(5, avoid=Avoidance.nw):
        assert passes(phi(m), Avoidance.sw)


def test_fixed_points_with_replacement_map() -> None:
    assert phi_fixed_points(3, mapping=lambda m: m) == 5
    assert phi_fixed_points(1) == 1
