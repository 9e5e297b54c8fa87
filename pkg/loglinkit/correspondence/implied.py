"""
Logistic quantities implied by a log-linear fit through beta = T lambda.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from loglinkit.correspondence.pair import CorrespondencePair
from loglinkit.design.incidence import IncidenceMatrix
from loglinkit.glm.inference import WaldInterval, intervals_from
from loglinkit.glm.irls import FitResult


def implied_beta(ll_fit: FitResult, incidence: IncidenceMatrix) -> NDArray[np.float64]:
    """T @ lambda-hat."""
    if incidence.shape[1] != ll_fit.estimates.size:
        raise ValueError(
            f"Incidence matrix has {incidence.shape[1]} columns, fit has "
            f"{ll_fit.estimates.size} parameters"
        )
    return incidence.apply(ll_fit.estimates)


def implied_beta_covariance(ll_fit: FitResult, incidence: IncidenceMatrix) -> NDArray[np.float64]:
    """T @ Cov(lambda-hat) @ T.T; its diagonal gives the implied squared standard errors."""
    if incidence.shape[1] != ll_fit.estimates.size:
        raise ValueError("Incidence matrix and fit disagree on the number of parameters")
    return incidence.congruence(ll_fit.covariance)


def implied_wald_intervals(pair: CorrespondencePair, alpha: float = 0.05) -> list[WaldInterval]:
    """Wald intervals for the logistic parameters, computed from the log-linear fit."""
    beta = implied_beta(pair.loglinear.fit, pair.incidence)
    covariance = implied_beta_covariance(pair.loglinear.fit, pair.incidence)
    return intervals_from(
        pair.logistic.fit.labels, beta, np.sqrt(np.clip(np.diag(covariance), 0.0, None)), alpha
    )
