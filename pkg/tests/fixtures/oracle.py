"""
Brute-force maximum likelihood by derivative-free search.

Independent of the IRLS code path: the objective is built from
scipy.stats log-pmfs and maximized with Powell's method.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import minimize
from scipy.special import expit
from scipy.stats import binom, poisson

_POWELL = {"xtol": 1e-10, "ftol": 1e-15, "maxiter": 50_000, "maxfev": 500_000}


def _maximize(
    objective: Callable[[NDArray[np.float64]], float], start: NDArray[np.float64]
) -> NDArray[np.float64]:
    result = minimize(objective, start, method="Powell", options=_POWELL)
    # restart from the optimum to shake off a stalled direction set
    result = minimize(objective, result.x, method="Powell", options=_POWELL)
    return np.asarray(result.x)


def poisson_mle(x: NDArray[np.float64], counts: NDArray[np.int64]) -> NDArray[np.float64]:
    """Maximize sum log P(n_i | exp(x_i beta))."""

    def negative(beta: NDArray[np.float64]) -> float:
        return -float(np.sum(poisson.logpmf(counts, np.exp(x @ beta))))

    start = np.zeros(x.shape[1])
    start[0] = np.log(counts.mean())
    return _maximize(negative, start)


def binomial_mle(
    x: NDArray[np.float64], trials: NDArray[np.int64], successes: NDArray[np.int64]
) -> NDArray[np.float64]:
    """Maximize sum log P(s_i | t_i, expit(x_i beta))."""

    def negative(beta: NDArray[np.float64]) -> float:
        return -float(np.sum(binom.logpmf(successes, trials, expit(x @ beta))))

    return _maximize(negative, np.zeros(x.shape[1]))
