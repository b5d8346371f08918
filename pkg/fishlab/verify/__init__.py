"""Named, bounded verification checks and the suite that runs them."""

from fishlab.verify.progress import (
    LoggingSuiteProgress,
    RichSuiteProgress,
    SuiteProgress,
    default_progress,
)
from fishlab.verify.registry import check, check_names, run_check, select
from fishlab.verify.report import (
    FISHBURN_NUMBERS,
    Outcome,
    SuiteParams,
    VerifyReport,
    fail,
    flag,
    ok,
)
from fishlab.verify.suite import all_passed, check_bounds, run_suite

__all__ = [
    "FISHBURN_NUMBERS",
    "LoggingSuiteProgress",
    "Outcome",
    "RichSuiteProgress",
    "SuiteParams",
    "SuiteProgress",
    "VerifyReport",
    "all_passed",
    "check",
    "check_bounds",
    "check_names",
    "default_progress",
    "fail",
    "flag",
    "ok",
    "run_check",
    "run_suite",
    "select",
]
