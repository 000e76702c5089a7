"""Structured pass/fail records shared by all verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


def stringify(value: Any):
    """Recursively encode big numbers as decimal strings for serialization."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return [stringify(v) for v in value]
    if isinstance(value, dict):
        return {str(k): stringify(v) for k, v in value.items()}
    return str(value)


@dataclass
class VerificationReport:
    suite: str
    n: int | None = None
    status: str = PASS
    details: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def fail(self, witness=None) -> "VerificationReport":
        self.status = FAIL
        if witness is not None:
            self.witnesses.append(witness)
        return self

    def to_json_dict(self, include_timing: bool = True) -> dict:
        d = {
            "suite": self.suite,
            "n": self.n,
            "status": self.status,
            "details": stringify(self.details),
            "witnesses": stringify(self.witnesses),
        }
        if include_timing:
            d["elapsed"] = self.elapsed
        return d


def combine(suite: str, n, reports) -> VerificationReport:
    """Aggregate: passes iff every sub-report passes (skips ignored)."""
    reports = list(reports)
    status = PASS
    if any(r.status == FAIL for r in reports):
        status = FAIL
    elif reports and all(r.status == SKIPPED for r in reports):
        status = SKIPPED
    agg = VerificationReport(suite=suite, n=n, status=status)
    agg.witnesses = [w for r in reports for w in r.witnesses]
    agg.elapsed = sum(r.elapsed for r in reports)
    return agg
