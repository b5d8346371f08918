"""Progress display for verification runs.

A rich progress bar is drawn on stderr when it is a terminal; otherwise
progress is logged every few seconds.
"""

from __future__ import annotations

import logging
import sys
import time
from typing import Protocol

from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    TextColumn,
    TimeElapsedColumn,
)

from fishlab.verify.report import VerifyReport

logger = logging.getLogger(__name__)


class SuiteProgress(Protocol):
    def __call__(self, report: VerifyReport, done: int, total: int) -> None:
        ...

    def close(self) -> None:
        ...


class RichSuiteProgress:
    """One bar for the whole suite, coloured by the latest status."""

    def __init__(self, total: int) -> None:
        self.console = Console(stderr=True)
        self.progress = Progress(
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TextColumn("[red]✖[/red] {task.fields[failed]} failed"),
            TimeElapsedColumn(),
            console=self.console,
        )
        self.task = self.progress.add_task("verify", total=total, failed=0)
        self.failed = 0
        self.progress.start()

    def __call__(self, report: VerifyReport, done: int, total: int) -> None:
        if not report.passed:
            self.failed += 1
        color = "red" if self.failed else "green"
        self.progress.update(
            self.task,
            completed=done,
            failed=self.failed,
            description=f"[{color}]{report.name}[/{color}]",
        )

    def close(self) -> None:
        self.progress.stop()


class LoggingSuiteProgress:
    def __init__(self, log_every_seconds: float = 5.0) -> None:
        self.log_every_seconds = log_every_seconds
        self._last_log = 0.0

    def __call__(self, report: VerifyReport, done: int, total: int) -> None:
        now = time.monotonic()
        if done < total and now - self._last_log < self.log_every_seconds:
            return
        self._last_log = now
        logger.info(f"Verified {done}/{total} checks (last: {report.name})")

    def close(self) -> None:
        pass


def default_progress(total: int) -> SuiteProgress:
    if sys.stderr.isatty():
        return RichSuiteProgress(total)
    return LoggingSuiteProgress()
