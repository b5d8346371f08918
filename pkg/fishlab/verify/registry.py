"""Registry of named verification checks.

Check modules register functions with the ``check`` decorator; names are
``<group>.<property>`` and run in registration order.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable

from fishlab.base.exceptions import FishlabError, VerificationError
from fishlab.verify.report import Outcome, SuiteParams, VerifyReport

logger = logging.getLogger(__name__)

CheckFunction = Callable[[SuiteParams], Outcome]

_REGISTRY: dict[str, CheckFunction] = {}


def check(name: str) -> Callable[[CheckFunction], CheckFunction]:
    """Register a check under ``name``."""

    def register(func: CheckFunction) -> CheckFunction:
        if name in _REGISTRY:
            raise VerificationError(f"Check '{name}' registered twice.")
        _REGISTRY[name] = func
        return func

    return register


def check_names() -> list[str]:
    return list(_REGISTRY)


def select(only: list[str] | None) -> list[str]:
    """Names matching any of ``only`` exactly or as a group prefix."""
    names = check_names()
    if not only:
        return names
    chosen = [
        name
        for name in names
        if any(name == o or name.startswith(f"{o}.") for o in only)
    ]
    if not chosen:
        raise VerificationError(
            f"No checks match {only}.", {"available": names}
        )
    return chosen


def run_check(name: str, params: SuiteParams) -> VerifyReport:
    """Run one check, turning domain errors into a failed report."""
    func = _REGISTRY.get(name)
    if func is None:
        raise VerificationError(f"Unknown check '{name}'.")
    start = time.perf_counter()
    try:
        outcome = func(params)
    except FishlabError as e:
        logger.error(f"Check {name} raised: {e}")
        outcome = Outcome(passed=False, message=f"{type(e).__name__}: {e}")
    elapsed = time.perf_counter() - start
    return VerifyReport(
        name=name,
        parameters=params.describe(),
        passed=outcome.passed,
        flagged=outcome.flagged,
        counterexample=outcome.counterexample,
        elapsed=round(elapsed, 3),
        message=outcome.message,
    )
