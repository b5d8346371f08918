"""Tests for the stats subcommand."""

from __future__ import annotations

import json


def test_dyck_peaks_csv(run_cli) -> None:
    code, out = run_cli(*"stats dyck -n 3 --stat pea --format csv".split())
    assert code == 0
    assert out == "pea,count\n1,1\n2,3\n3,1\n"


def test_count_only(run_cli) -> None:
    code, out = run_cli(
        *"stats matrices -w 4 --primitive --avoid nw --format json".split()
    )
    assert code == 0
    assert json.loads(out) == [{"count": 4}]


def test_ne_lc_is_symmetric(run_cli) -> None:
    code, out = run_cli(
        *"stats matrices -w 5 --stat ne --stat lc --format json".split()
    )
    rows = {(r["ne"], r["lc"]): r["count"] for r in json.loads(out)}

    assert code == 0
    assert sum(rows.values()) == 53
    assert all(rows.get((b, a)) == n for (a, b), n in rows.items())


def test_text_table(run_cli) -> None:
    code, out = run_cli("stats", "perms", "-n", "3", "--stat", "LRmax")
    assert code == 0
    assert out.split() == ["LRmax", "count", "1", "2", "2", "2", "3", "1"]


def test_unknown_statistic(run_cli) -> None:
    code, out = run_cli("stats", "dyck", "-n", "3", "--stat", "bogus")
    assert code == 2
    assert out == ""


def test_bound_exceeded(run_cli) -> None:
    code, _ = run_cli("stats", "matrices", "-w", "99")
    assert code == 2


def test_size_must_be_positive(run_cli) -> None:
    code, _ = run_cli("stats", "dyck", "-n", "0")
    assert code == 2


def test_weight_and_order_are_exclusive(run_cli) -> None:
    code, _ = run_cli("stats", "dyck", "-n", "3", "-w", "3")
    assert code == 2
