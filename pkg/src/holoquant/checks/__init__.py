"""Verification suites behind `holoquant check`."""

from .base import SuiteRun
from .runner import SUITE_NAMES, SUITES, run_suite

__all__ = [
    "SuiteRun",
    "SUITES",
    "SUITE_NAMES",
    "run_suite",
]
