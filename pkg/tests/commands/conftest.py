"""Helpers for driving the command line in-process."""

from __future__ import annotations

from collections.abc import Callable

import pytest

from fishlab.cli import main

Runner = Callable[..., tuple[int, str]]


@pytest.fixture
def run_cli(capsys, fresh_settings) -> Runner:
    """Run ``fishlab`` with the given arguments; return (exit code, stdout)."""

    def run(*argv: str) -> tuple[int, str]:
        try:
            main(list(argv))
        except SystemExit as e:
            code = e.code if isinstance(e.code, int) else 1
        else:
            code = 0
        return code, capsys.readouterr().out

    return run
