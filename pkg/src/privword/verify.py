from __future__ import annotations

import logging
from collections.abc import Callable
from typing import Any

from .exceptions import InvalidInputError, NotSupportedError
from .harness import suites
from .harness.report import VerifyReport
from .harness.suites import SuiteConfig, SuiteContext

logger = logging.getLogger(__name__)

SUITES: dict[str, Callable[[SuiteContext], VerifyReport]] = {
    "definitions": suites.definitions,
    "recursive-bound": suites.recursive_bound,
    "avoidance": suites.avoidance,
    "partition": suites.partition,
    "bounds": suites.bounds,
    "limits": suites.limits,
}


def suite_names() -> list[str]:
    return [*SUITES, "all"]


def run_suite(name: str, cfg: SuiteConfig | None = None, **kwargs: Any) -> VerifyReport:
    """Run one named suite, or every suite in order for name == "all".

    Keyword arguments build a SuiteConfig when cfg is not given.
    """
    if cfg is None:
        cfg = SuiteConfig(**kwargs)
    elif kwargs:
        raise InvalidInputError("pass either cfg or keyword arguments, not both")

    if name == "all":
        ctx = SuiteContext(cfg)
        report = ctx.report("all")
        for key, fn in SUITES.items():
            report.extend(_run(key, fn, ctx))
        return report

    fn = SUITES.get(name)
    if fn is None:
        raise NotSupportedError(f"suite '{name}' is not supported")
    return _run(name, fn, SuiteContext(cfg))


def _run(name: str, fn: Callable[[SuiteContext], VerifyReport], ctx: SuiteContext) -> VerifyReport:
    logger.info("suite %s: start (q=%d, max_n=%d)", name, ctx.cfg.q, ctx.cfg.max_n)
    report = fn(ctx)
    logger.info(
        "suite %s: %d checks, %d violations", name, report.checks_run, report.violations
    )
    for rec in report.records:
        if rec.verdict is False:
            logger.warning("violation in %s: %s %s lhs=%s rhs=%s",
                           name, rec.check, rec.params, rec.lhs, rec.rhs)
    return report
