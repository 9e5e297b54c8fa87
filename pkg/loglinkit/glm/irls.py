"""
Iteratively reweighted least squares for canonical-link GLMs.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike, NDArray

from loglinkit.conf.settings import Settings
from loglinkit.design.builder import DesignMatrix
from loglinkit.exceptions import (
    ConvergenceError,
    DataError,
    MLENotFoundError,
    SingularInformationError,
)
from loglinkit.glm.families import FamilySpec
from loglinkit.utils.logging import get_logger

logger = get_logger(__name__)

# deviance noise per unit of data once the score equations hold
DEVIANCE_NOISE = 1024 * float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class FitOptions:
    """Convergence controls for :func:`fit_irls`."""

    tolerance: float = 1e-10
    deviance_tolerance: float = 1e-12
    max_iterations: int = 100
    divergence_bound: float = 30.0
    rank_tolerance: float = 1e-8

    @classmethod
    def from_settings(cls, settings: Settings | None = None) -> FitOptions:
        """Options from the given or the global settings."""
        if settings is None:
            from loglinkit.conf import get_settings

            settings = get_settings()
        return cls(
            tolerance=settings.score_tolerance,
            deviance_tolerance=settings.deviance_tolerance,
            max_iterations=settings.max_iterations,
            divergence_bound=settings.divergence_bound,
            rank_tolerance=settings.rank_tolerance,
        )


@dataclass(frozen=True, eq=False)
class FitResult:
    """
    A converged GLM fit.

    ``fitted`` holds mu-hat (Poisson) or p-hat (Binomial) per design row;
    ``covariance`` is the inverse of ``information`` = X.T V X at the MLE.
    ``dropped`` lists covariate classes left out of the likelihood.
    ``max_score_residual`` is the largest absolute score divided by max(1, N).
    """

    family: str
    labels: tuple[str, ...]
    estimates: NDArray[np.float64]
    covariance: NDArray[np.float64]
    information: NDArray[np.float64]
    deviance: float
    fitted: NDArray[np.float64]
    iterations: int
    converged: bool
    max_score_residual: float
    dropped: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def std_errors(self) -> NDArray[np.float64]:
        return np.sqrt(np.diag(self.covariance))

    def estimate(self, label: str) -> float:
        """Estimate for one parameter by label."""
        return float(self.estimates[self.labels.index(label)])

    def std_error(self, label: str) -> float:
        """Standard error for one parameter by label."""
        return float(self.std_errors[self.labels.index(label)])

    def to_dict(self) -> dict[str, Any]:
        """Plain-Python form for serialization."""
        return {
            "family": self.family,
            "converged": self.converged,
            "iterations": self.iterations,
            "max_score_residual": self.max_score_residual,
            "deviance": self.deviance,
            "parameters": [
                {"label": label, "estimate": float(est), "std_error": float(se)}
                for label, est, se in zip(self.labels, self.estimates, self.std_errors)
            ],
            "covariance": [[float(v) for v in row] for row in self.covariance],
            "fitted": [float(v) for v in self.fitted],
            "dropped": [list(cls) for cls in self.dropped],
        }


def _weighted_qr(
    x: NDArray[np.float64], weights: NDArray[np.float64], rank_tolerance: float
) -> tuple[NDArray[np.float64], NDArray[np.float64], NDArray[np.float64]]:
    root = np.sqrt(weights)
    q, r = scipy.linalg.qr(root[:, None] * x, mode="economic")
    pivots = np.abs(np.diag(r))
    if pivots.size and pivots.min() <= rank_tolerance * pivots.max():
        raise SingularInformationError(
            f"Weighted design is singular (smallest pivot {pivots.min():.3e})"
        )
    return q, r, root


def fit_irls(
    design: DesignMatrix | ArrayLike,
    response: ArrayLike,
    family: FamilySpec,
    options: FitOptions | None = None,
    labels: Sequence[str] | None = None,
) -> FitResult:
    """
    Fit a canonical-link GLM by Fisher scoring.

    Each step solves the weighted least-squares problem through a QR
    decomposition of V^(1/2) X. Convergence needs the max score residual,
    divided by max(1, N), below ``options.tolerance`` (N is the total count
    or the total number of trials). The deviance must also have settled:
    its relative change below ``options.deviance_tolerance``, or its
    absolute change within rounding noise of N. Deviances are clamped at 0.

    Args:
        design: DesignMatrix or plain full-rank matrix
        response: Counts (Poisson) or proportions (Binomial), one per row
        family: Poisson() or Binomial(trials)
        options: Convergence controls; defaults from settings
        labels: Parameter labels for a plain matrix

    Returns:
        FitResult

    Raises:
        ConvergenceError: If the iteration limit is reached
        MLENotFoundError: If an estimate exceeds the divergence bound
        SingularInformationError: If X.T V X is singular
    """
    if options is None:
        options = FitOptions.from_settings()
    if isinstance(design, DesignMatrix):
        x = design.entries
        names = design.labels
    else:
        x = np.asarray(design, dtype=np.float64)
        names = tuple(labels) if labels is not None else tuple(f"x{j}" for j in range(x.shape[1]))
    y = np.asarray(response, dtype=np.float64)
    if x.ndim != 2 or y.shape != (x.shape[0],):
        raise DataError(f"Response of shape {y.shape} does not match design {x.shape}")
    if len(names) != x.shape[1]:
        raise DataError(f"{len(names)} labels for {x.shape[1]} columns")

    scale = max(1.0, family.total(y))
    eta = family.initial_eta(y)
    mu = family.mean(eta)
    previous = max(family.deviance(y, mu), 0.0)
    beta = np.zeros(x.shape[1])
    max_residual = np.inf
    deviance = previous

    for iteration in range(1, options.max_iterations + 1):
        weights = family.working_weights(mu)
        working = eta + family.score_residual(y, mu) / weights
        q, r, root = _weighted_qr(x, weights, options.rank_tolerance)
        beta = scipy.linalg.solve_triangular(r, q.T @ (root * working))

        largest = float(np.max(np.abs(beta)))
        if not np.isfinite(largest) or largest > options.divergence_bound:
            raise MLENotFoundError(iteration, largest, options.divergence_bound)

        eta = x @ beta
        mu = family.mean(eta)
        deviance = max(family.deviance(y, mu), 0.0)
        max_residual = float(np.max(np.abs(x.T @ family.score_residual(y, mu)))) / scale
        step = abs(deviance - previous)
        settled = (
            step / (deviance + 0.1) < options.deviance_tolerance or step <= DEVIANCE_NOISE * scale
        )
        logger.debug(
            "%s IRLS iteration %d: deviance=%.12g max score residual=%.3e",
            family.name,
            iteration,
            deviance,
            max_residual,
        )
        if max_residual < options.tolerance and settled:
            break
        previous = deviance
    else:
        raise ConvergenceError(options.max_iterations, max_residual, deviance)

    _, r, _ = _weighted_qr(x, family.working_weights(mu), options.rank_tolerance)
    r_inv = scipy.linalg.solve_triangular(r, np.eye(r.shape[0]))
    covariance = r_inv @ r_inv.T
    weights = family.working_weights(mu)
    information = x.T @ (weights[:, None] * x)

    logger.info(
        "%s fit converged in %d iterations (deviance %.6g)", family.name, iteration, deviance
    )
    return FitResult(
        family=family.name,
        labels=tuple(names),
        estimates=beta,
        covariance=(covariance + covariance.T) / 2.0,
        information=information,
        deviance=deviance,
        fitted=mu,
        iterations=iteration,
        converged=True,
        max_score_residual=max_residual,
    )
