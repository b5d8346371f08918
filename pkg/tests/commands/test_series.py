"""Tests for the series subcommand."""

from __future__ import annotations

import json


def test_F_text(run_cli) -> None:
    code, out = run_cli("series", "F", "-N", "2")
    assert code == 0
    assert out == "1 x^1 y^1 z^1\n1 x^2 y^1 z^2\n1 x^2 y^2 z^1\n"


def test_brute_matches_F(run_cli) -> None:
    _, formula = run_cli("series", "F", "-N", "4")
    _, brute = run_cli("series", "brute", "-N", "4")
    assert formula == brute


def test_G_json(run_cli) -> None:
    code, out = run_cli("series", "G1", "-N", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "max_degree": 2,
        "weights": [1, 0, 0],
        "terms": {"1,1,0": 1, "2,1,0": 1, "2,2,0": 1},
    }


def test_degree_required(run_cli) -> None:
    code, _ = run_cli("series", "P")
    assert code == 2
