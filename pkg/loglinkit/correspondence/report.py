"""
Correspondence report - collects check records for one pair.
"""

from __future__ import annotations

from typing import Any

from loglinkit.correspondence.checks import (
    DEFAULT_TOLERANCE,
    CheckRecord,
    fitted_probability_identity,
    verify_deviance_equality,
    verify_margin_totals,
    verify_merged_deviance,
    verify_mle_equality,
    verify_std_error_equality,
    verify_wald_intervals,
)
from loglinkit.correspondence.pair import CorrespondencePair
from loglinkit.utils.logging import get_logger

logger = get_logger(__name__)


class CorrespondenceReport:
    """Result of verifying one correspondence pair."""

    def __init__(self, outcome: str, loglinear: str, logistic: str, merge: tuple[str, ...]):
        self.outcome = outcome
        self.loglinear = loglinear
        self.logistic = logistic
        self.merge = merge
        self.records: list[CheckRecord] = []

    def add(self, record: CheckRecord) -> None:
        """Add a check record."""
        self.records.append(record)
        level = "passed" if record.passed else "FAILED"
        logger.info(
            "Check %s %s (discrepancy %.3e, tolerance %.1e)",
            record.name,
            level,
            record.discrepancy,
            record.tolerance,
        )

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    @property
    def failed(self) -> list[str]:
        return [record.name for record in self.records if not record.passed]

    def record(self, name: str) -> CheckRecord:
        """Look up a record by check name."""
        for record in self.records:
            if record.name == name:
                return record
        raise KeyError(name)

    def __bool__(self) -> bool:
        """Return True if every check passed."""
        return self.passed

    def to_dict(self) -> dict[str, Any]:
        return {
            "outcome": self.outcome,
            "loglinear_model": self.loglinear,
            "logistic_model": self.logistic,
            "merge": list(self.merge),
            "passed": self.passed,
            "checks": [record.to_dict() for record in self.records],
        }


def verify_correspondence(
    pair: CorrespondencePair, tol: float = DEFAULT_TOLERANCE, alpha: float = 0.05
) -> CorrespondenceReport:
    """
    Run every applicable check on a pair.

    Equal deviances are checked without merging; with merging the report
    instead checks that the merged deviance differs from the unmerged one.

    Args:
        pair: Eligible correspondence pair
        tol: Absolute tolerance for every discrepancy
        alpha: Level for the Wald interval comparison

    Returns:
        CorrespondenceReport, also when some checks fail

    Raises:
        IneligibleModelError: If the log-linear model is not eligible
    """
    report = CorrespondenceReport(
        outcome=pair.outcome,
        loglinear=str(pair.loglinear.formula),
        logistic=str(pair.logistic.formula),
        merge=pair.merge,
    )
    report.add(verify_margin_totals(pair, tol))
    report.add(verify_mle_equality(pair, tol))
    report.add(verify_std_error_equality(pair, tol))
    report.add(fitted_probability_identity(pair, tol))
    report.add(verify_wald_intervals(pair, tol, alpha))
    if pair.merge:
        report.add(verify_merged_deviance(pair, tol))
    else:
        report.add(verify_deviance_equality(pair, tol))
    return report
