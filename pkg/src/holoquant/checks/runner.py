"""Suite registry and the combined `all` run."""

import logging
from typing import Callable, Dict

from ..models.run import CheckCase, CheckReport, RunConfig
from . import algebra, fock, modes, parser, quasiprob

logger = logging.getLogger(__name__)

SUITES: Dict[str, Callable[..., CheckReport]] = {
    "algebra": algebra.run,
    "fock": fock.run,
    "quasiprob": quasiprob.run,
    "modes": modes.run,
    "parser": parser.run,
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, config: RunConfig, progress: bool = False) -> CheckReport:
    """Run one suite, or every suite in registry order for `all`."""
    if name == "all":
        cases = []
        for suite_name, runner in SUITES.items():
            report = runner(config, progress=progress)
            cases.extend(
                CheckCase(**{**case.model_dump(), "name": f"{suite_name}.{case.name}"}) for case in report.cases
            )
        combined = CheckReport(suite="all", cases=cases, seed=config.seed, config_digest=config.digest())
        _log_summary(combined)
        return combined
    if name not in SUITES:
        raise KeyError(f"Unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    logger.info("Running suite %s with seed %d", name, config.seed)
    report = SUITES[name](config, progress=progress)
    _log_summary(report)
    return report


def _log_summary(report: CheckReport) -> None:
    failed = len(report.failures)
    if failed:
        logger.warning("Suite %s: %d of %d case(s) failed", report.suite, failed, len(report.cases))
    else:
        logger.info("Suite %s: all %d case(s) passed", report.suite, len(report.cases))
