"""
Log-likelihood and score as functions of the coefficient vector.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray

from loglinkit.design.builder import DesignMatrix
from loglinkit.glm.families import FamilySpec


def _matrix(design: DesignMatrix | ArrayLike) -> NDArray[np.float64]:
    if isinstance(design, DesignMatrix):
        return design.entries
    return np.asarray(design, dtype=np.float64)


def log_likelihood(
    beta: ArrayLike,
    design: DesignMatrix | ArrayLike,
    response: ArrayLike,
    family: FamilySpec,
) -> float:
    """Exact log-likelihood at ``beta``."""
    x = _matrix(design)
    mu = family.mean(x @ np.asarray(beta, dtype=np.float64))
    return family.log_likelihood(np.asarray(response, dtype=np.float64), mu)


def score(
    beta: ArrayLike,
    design: DesignMatrix | ArrayLike,
    response: ArrayLike,
    family: FamilySpec,
) -> NDArray[np.float64]:
    """
    Gradient of :func:`log_likelihood` in ``beta``.

    For canonical links this is X.T (observed - fitted), with the binomial
    residual scaled by the trials.
    """
    x = _matrix(design)
    mu = family.mean(x @ np.asarray(beta, dtype=np.float64))
    return x.T @ family.score_residual(np.asarray(response, dtype=np.float64), mu)
