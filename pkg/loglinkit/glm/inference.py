"""
Wald confidence intervals.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from scipy.stats import norm

from loglinkit.glm.irls import FitResult


@dataclass(frozen=True)
class WaldInterval:
    """estimate -/+ z * std_error at confidence level 1 - alpha."""

    label: str
    estimate: float
    std_error: float
    lower: float
    upper: float
    level: float


def normal_quantile(alpha: float) -> float:
    """Two-sided standard-normal quantile z with P(|Z| <= z) = 1 - alpha."""
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    return float(norm.ppf(1.0 - alpha / 2.0))


def intervals_from(
    labels: Sequence[str], estimates: ArrayLike, std_errors: ArrayLike, alpha: float
) -> list[WaldInterval]:
    """Wald intervals for parallel sequences of labels, estimates and standard errors."""
    z = normal_quantile(alpha)
    estimates = np.asarray(estimates, dtype=np.float64)
    std_errors = np.asarray(std_errors, dtype=np.float64)
    return [
        WaldInterval(
            label=label,
            estimate=float(est),
            std_error=float(se),
            lower=float(est - z * se),
            upper=float(est + z * se),
            level=1.0 - alpha,
        )
        for label, est, se in zip(labels, estimates, std_errors)
    ]


def wald_intervals(fit: FitResult, alpha: float = 0.05) -> list[WaldInterval]:
    """
    Per-parameter Wald intervals of a converged fit.

    Args:
        fit: Converged FitResult
        alpha: 1 - confidence level; alpha = 1 gives zero-width intervals

    Returns:
        list of WaldInterval in parameter order
    """
    return intervals_from(fit.labels, fit.estimates, fit.std_errors, alpha)
