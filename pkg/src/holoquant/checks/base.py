"""Shared machinery for verification suites."""

import logging
import math
import warnings
from typing import Callable, Iterable, List, Optional, Tuple, Union

import numpy as np
from tqdm import tqdm

from ..exceptions import ConfigurationError, ContractError, SymbolError
from ..models.run import CheckCase, CheckReport, RunConfig

logger = logging.getLogger(__name__)

Measurement = Union[float, Tuple[float, Optional[str]]]

# Errors a case may legitimately hit under a hostile configuration
CASE_ERRORS = (ConfigurationError, ContractError, SymbolError, ValueError)

MAX_DETAIL = 400


def _warning_detail(caught: List[warnings.WarningMessage]) -> Optional[str]:
    if not caught:
        return None
    messages: List[str] = []
    for item in caught:
        text = f"{item.category.__name__}: {item.message}"
        if text not in messages:
            messages.append(text)
    detail = f"{len(caught)} warning(s); " + "; ".join(messages)
    return detail if len(detail) <= MAX_DETAIL else detail[: MAX_DETAIL - 3] + "..."


class SuiteRun:
    """Collects the cases of one suite run; randomness comes from the configured seed."""

    def __init__(self, suite: str, config: RunConfig, progress: bool = False):
        self.suite = suite
        self.config = config
        self.progress = progress
        self.rng = np.random.default_rng(config.seed)
        self.cases: List[CheckCase] = []

    def case(self, name: str, tolerance: float, measure: Callable[[], Measurement]) -> CheckCase:
        """Run `measure`, recording a pass when its value is within `tolerance`.

        Warnings raised while measuring are attached to the case detail; library
        errors turn the case into a failure instead of aborting the suite.
        """
        detail: Optional[str] = None
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            try:
                outcome = measure()
            except CASE_ERRORS as e:
                logger.error("Case %s.%s raised %s: %s", self.suite, name, type(e).__name__, e)
                outcome = (math.inf, f"{type(e).__name__}: {e}")
        measured, detail = outcome if isinstance(outcome, tuple) else (outcome, None)
        measured = float(measured)
        warned = _warning_detail(caught)
        detail = "; ".join(part for part in (detail, warned) if part) or None

        status = "pass" if measured <= tolerance else "fail"
        result = CheckCase(name=name, status=status, measured=measured, tolerance=tolerance, detail=detail)
        self.cases.append(result)
        log = logger.info if result.passed else logger.warning
        log("%s.%s: %s (measured %.3g, tolerance %.3g)", self.suite, name, status, measured, tolerance)
        return result

    def iterate(self, items: Union[int, Iterable], desc: str):
        """Progress-wrapped `range(items)` for a count, otherwise the items themselves."""
        if isinstance(items, int):
            items = range(items)
        return tqdm(items, desc=f"{self.suite}: {desc}", disable=not self.progress, leave=False)

    def report(self) -> CheckReport:
        return CheckReport(
            suite=self.suite, cases=self.cases, seed=self.config.seed, config_digest=self.config.digest()
        )


def random_point(rng: np.random.Generator, radius: float) -> complex:
    """Uniform point in the disc of the given radius."""
    r = radius * math.sqrt(rng.random())
    return complex(r * np.exp(2j * np.pi * rng.random()))
