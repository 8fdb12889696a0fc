from __future__ import annotations

import datetime
import json
from dataclasses import dataclass, field
from typing import Any

import pandas as pd

from .. import __version__

Scalar = int | float | str | bool | None



@dataclass(frozen=True)
class CheckRecord:
    """One evaluated inequality or diagnostic.

    verdict is None for informational records (fitted constants, guards,
    crossovers); those never count as violations.
    """
    check: str
    params: dict[str, Scalar]
    lhs: Scalar
    rhs: Scalar
    verdict: bool | None



@dataclass
class VerifyReport:
    suite: str
    config: dict[str, Any]
    records: list[CheckRecord] = field(default_factory=list)

    def add(
        self,
        check: str,
        lhs: Scalar,
        rhs: Scalar,
        verdict: bool | None,
        **params: Scalar,
    ) -> CheckRecord:
        rec = CheckRecord(check=check, params=dict(params), lhs=lhs, rhs=rhs, verdict=verdict)
        self.records.append(rec)
        return rec

    def extend(self, other: VerifyReport) -> None:
        self.records.extend(other.records)

    @property
    def violations(self) -> int:
        return sum(1 for r in self.records if r.verdict is False)

    @property
    def checks_run(self) -> int:
        return sum(1 for r in self.records if r.verdict is not None)

    def summary(self) -> dict[str, int]:
        return {
            "records": len(self.records),
            "checks": self.checks_run,
            "violations": self.violations,
        }

    def data(self) -> dict[str, Any]:
        """The reproducible part of the report: no timestamps, no versions."""
        return {
            "suite": self.suite,
            "config": self.config,
            "records": [
                {
                    "check": r.check,
                    "params": r.params,
                    "lhs": r.lhs,
                    "rhs": r.rhs,
                    "verdict": r.verdict,
                }
                for r in self.records
            ],
            "summary": self.summary(),
        }

    def to_json(self, *, timestamp: datetime.datetime | None = None) -> str:
        ts = timestamp or datetime.datetime.now(datetime.timezone.utc)
        doc = {"meta": {"version": __version__, "timestamp": ts.isoformat()}, **self.data()}
        return json.dumps(doc, indent=2)

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                "check": r.check,
                "params": json.dumps(r.params, sort_keys=True),
                "lhs": r.lhs,
                "rhs": r.rhs,
                "verdict": "" if r.verdict is None else str(r.verdict).lower(),
            }
            for r in self.records
        ]
        return pd.DataFrame(rows, columns=["check", "params", "lhs", "rhs", "verdict"])

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False, lineterminator="\n")
