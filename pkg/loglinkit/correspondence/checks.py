"""
Numerical checks of the log-linear / logistic correspondence.

Each check compares a quantity implied by the log-linear fit with the one
from the direct logistic fit and records the largest absolute discrepancy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from loglinkit.correspondence.implied import (
    implied_beta,
    implied_beta_covariance,
    implied_wald_intervals,
)
from loglinkit.correspondence.pair import CorrespondencePair
from loglinkit.exceptions import FitError, IneligibleModelError
from loglinkit.glm.inference import wald_intervals
from loglinkit.table.grouping import collapse

DEFAULT_TOLERANCE = 1e-8


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of one check."""

    name: str
    discrepancy: float
    tolerance: float
    passed: bool
    values: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "discrepancy": self.discrepancy,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "values": dict(self.values),
        }


def _record(name: str, discrepancy: float, tol: float, **values: float) -> CheckRecord:
    return CheckRecord(name, float(discrepancy), tol, bool(discrepancy <= tol), values)


def _require(pair: CorrespondencePair) -> None:
    if not pair.eligible:
        raise IneligibleModelError(pair.outcome, pair.eligibility.required_term)
    fits = [pair.loglinear.fit, pair.logistic.fit]
    if pair.unmerged is not None:
        fits.append(pair.unmerged.fit)
    if not all(fit.converged for fit in fits):
        raise FitError("Correspondence checks need converged fits")


def verify_margin_totals(pair: CorrespondencePair, tol: float = DEFAULT_TOLERANCE) -> CheckRecord:
    """Observed and fitted totals n_0 + n_1 agree in every covariate class."""
    _require(pair)
    observed, _ = collapse(pair.table.flat_counts(), pair.table, pair.outcome)
    fitted, _ = collapse(pair.loglinear.fit.fitted, pair.table, pair.outcome)
    return _record("margin_totals", np.max(np.abs(observed - fitted)), tol)


def verify_mle_equality(pair: CorrespondencePair, tol: float = DEFAULT_TOLERANCE) -> CheckRecord:
    """T lambda-hat equals the directly fitted beta-hat."""
    _require(pair)
    beta = implied_beta(pair.loglinear.fit, pair.incidence)
    return _record("mle_equality", np.max(np.abs(beta - pair.logistic.fit.estimates)), tol)


def verify_std_error_equality(
    pair: CorrespondencePair, tol: float = DEFAULT_TOLERANCE
) -> CheckRecord:
    """
    T Cov(lambda-hat) T' equals the logistic covariance.

    The discrepancy is the larger of the covariance and standard-error gaps.
    """
    _require(pair)
    implied = implied_beta_covariance(pair.loglinear.fit, pair.incidence)
    direct = pair.logistic.fit.covariance
    cov_gap = float(np.max(np.abs(implied - direct)))
    se_gap = float(np.max(np.abs(np.sqrt(np.diag(implied)) - pair.logistic.fit.std_errors)))
    return _record(
        "std_error_equality",
        max(cov_gap, se_gap),
        tol,
        covariance_gap=cov_gap,
        std_error_gap=se_gap,
    )


def verify_deviance_equality(
    pair: CorrespondencePair, tol: float = DEFAULT_TOLERANCE
) -> CheckRecord:
    """Equal deviances when no cells are merged."""
    _require(pair)
    if pair.merge:
        raise ValueError("Equal deviances only hold without merging; use verify_merged_deviance")
    ll_deviance = pair.loglinear.fit.deviance
    lt_deviance = pair.logistic.fit.deviance
    return _record(
        "deviance_equality",
        abs(ll_deviance - lt_deviance),
        tol,
        loglinear_deviance=ll_deviance,
        logistic_deviance=lt_deviance,
    )


def verify_merged_deviance(
    pair: CorrespondencePair, tol: float = DEFAULT_TOLERANCE
) -> CheckRecord:
    """
    After merging, the logistic deviance differs from the unmerged one.

    Passes when D_unmerged - D_merged exceeds ``tol``; the discrepancy is
    that difference, which is never negative.
    """
    _require(pair)
    if not pair.merge or pair.unmerged is None:
        raise ValueError("No merged grouping to compare; use verify_deviance_equality")
    merged = pair.logistic.fit.deviance
    unmerged = pair.unmerged.fit.deviance
    gap = unmerged - merged
    return CheckRecord(
        name="merged_deviance_differs",
        discrepancy=float(gap),
        tolerance=tol,
        passed=bool(gap > tol),
        values={
            "loglinear_deviance": pair.loglinear.fit.deviance,
            "merged_deviance": merged,
            "unmerged_deviance": unmerged,
        },
    )


def fitted_probability_identity(
    pair: CorrespondencePair, tol: float = DEFAULT_TOLERANCE
) -> CheckRecord:
    """p-hat per class equals mu1 / (mu0 + mu1) from the log-linear fit, merged over ``merge``."""
    _require(pair)
    totals, successes = collapse(pair.loglinear.fit.fitted, pair.table, pair.outcome, pair.merge)
    implied = successes / totals
    keep = pair.logistic.data.nonempty_mask() if pair.logistic.data is not None else slice(None)
    gap = np.max(np.abs(implied[keep] - pair.logistic.fit.fitted[keep]))
    return _record("fitted_probability", gap, tol)


def verify_wald_intervals(
    pair: CorrespondencePair, tol: float = DEFAULT_TOLERANCE, alpha: float = 0.05
) -> CheckRecord:
    """Wald interval end points agree between the implied and direct logistic fits."""
    _require(pair)
    implied = implied_wald_intervals(pair, alpha)
    direct = wald_intervals(pair.logistic.fit, alpha)
    gap = max(
        max(abs(a.lower - b.lower), abs(a.upper - b.upper)) for a, b in zip(implied, direct)
    )
    return _record("wald_interval", gap, tol)
