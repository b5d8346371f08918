"""Running the registered checks, serially or across processes."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor

from fishlab.base.config import get_settings, require_within
from fishlab.verify import checks  # noqa: F401  registers every check
from fishlab.verify.progress import SuiteProgress
from fishlab.verify.registry import run_check, select
from fishlab.verify.report import SuiteParams, VerifyReport

logger = logging.getLogger(__name__)


def check_bounds(params: SuiteParams) -> None:
    """Raise BoundExceededError when a bound exceeds the settings."""
    settings = get_settings()
    require_within("max_weight", params.max_weight, settings.max_weight)
    require_within(
        "max_dyck_order", params.max_dyck_order, settings.max_dyck_order
    )
    require_within(
        "catstat_order", params.catstat_order, settings.max_dyck_order
    )


def _run_one(name: str, params: SuiteParams) -> VerifyReport:
    # workers unpickle this function, importing the checks with it
    return run_check(name, params)


def _reports(
    names: list[str], params: SuiteParams, jobs: int
) -> Iterator[VerifyReport]:
    if jobs <= 1:
        for name in names:
            yield run_check(name, params)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map yields in submission order
        yield from pool.map(_run_one, names, itertools.repeat(params))


def run_suite(
    params: SuiteParams,
    only: list[str] | None = None,
    jobs: int = 1,
    progress: SuiteProgress | None = None,
) -> list[VerifyReport]:
    """Run the selected checks and return their reports in registry order.

    Raises:
        BoundExceededError: If a bound exceeds its configured maximum.
        VerificationError: If ``only`` matches no check.
    """
    check_bounds(params)
    names = select(only)
    logger.info(f"Running {len(names)} checks with {jobs} job(s)")
    reports: list[VerifyReport] = []
    try:
        for report in _reports(names, params, jobs):
            reports.append(report)
            if report.passed:
                logger.info(
                    f"{report.status()} {report.name} ({report.elapsed}s)"
                )
            else:
                logger.error(f"FAIL {report.name}: {report.message}")
            if progress is not None:
                progress(report, len(reports), len(names))
    finally:
        if progress is not None:
            progress.close()
    return reports


def all_passed(reports: list[VerifyReport]) -> bool:
    return all(report.passed for report in reports)
