"""
Deviance of log-linear and logistic fits against their saturated models.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import xlogy

from loglinkit.exceptions import DataError

TOTAL_TOLERANCE = 1e-8


def deviance_poisson(n: ArrayLike, mu_hat: ArrayLike, check_total: bool = True) -> float:
    """
    Log-linear deviance 2 * sum n_i log(n_i / mu_i), with 0 log 0 = 0.

    The term 2 * sum (n_i - mu_i) is subtracted as well. It vanishes when
    fitted and observed totals agree (models with an intercept); IRLS
    evaluates intermediate means with ``check_total=False``.

    Args:
        n: Observed counts
        mu_hat: Fitted means
        check_total: Verify sum(n) == sum(mu_hat) (relative tolerance 1e-8)

    Returns:
        Deviance

    Raises:
        DataError: If a fitted mean is not positive or the totals differ
    """
    counts = np.asarray(n, dtype=np.float64)
    fitted = np.asarray(mu_hat, dtype=np.float64)
    if counts.shape != fitted.shape:
        raise DataError(f"Counts {counts.shape} and fitted means {fitted.shape} differ in shape")
    if np.any(fitted <= 0):
        raise DataError("Fitted means must be positive")
    if check_total:
        gap = abs(counts.sum() - fitted.sum())
        if gap > TOTAL_TOLERANCE * max(1.0, counts.sum()):
            raise DataError(
                f"Observed and fitted totals differ by {gap:.3e}; "
                "the short deviance form needs a model with an intercept"
            )
    return float(2.0 * np.sum(xlogy(counts, counts / fitted) - (counts - fitted)))


def deviance_binomial(t: ArrayLike, y: ArrayLike, p_hat: ArrayLike) -> float:
    """
    Logistic deviance for grouped proportions, with 0 log 0 = 0.

    Args:
        t: Trials per class
        y: Observed proportions in [0, 1]
        p_hat: Fitted probabilities in (0, 1)

    Returns:
        2 sum t y log(y/p) + 2 sum (t - t y) log((1 - y)/(1 - p))

    Raises:
        DataError: If a fitted probability is 0 or 1, or y lies outside [0, 1]
    """
    trials = np.asarray(t, dtype=np.float64)
    observed = np.asarray(y, dtype=np.float64)
    fitted = np.asarray(p_hat, dtype=np.float64)
    if not (trials.shape == observed.shape == fitted.shape):
        raise DataError("Trials, proportions and fitted probabilities differ in shape")
    if np.any(fitted <= 0) or np.any(fitted >= 1):
        raise DataError("Fitted probabilities must lie strictly between 0 and 1")
    if np.any(observed < 0) or np.any(observed > 1):
        raise DataError("Observed proportions must lie in [0, 1]")
    successes = trials * observed
    failures = trials - successes
    return float(
        2.0 * np.sum(xlogy(successes, observed / fitted))
        + 2.0 * np.sum(xlogy(failures, (1.0 - observed) / (1.0 - fitted)))
    )
