"""
Exponential families with canonical links.

A family works on a response vector in the scale of its mean: counts for
Poisson, proportions of successes for Binomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Protocol

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import expit, gammaln, logit, xlog1py, xlogy

from loglinkit.exceptions import DataError
from loglinkit.glm.deviance import deviance_binomial, deviance_poisson

# keeps mu strictly inside the support once exp/expit saturate in double precision
_EPS = float(np.finfo(np.float64).eps)
_TINY = float(np.finfo(np.float64).tiny)


class FamilySpec(Protocol):
    """Interface IRLS needs from a family."""

    name: str

    def initial_eta(self, response: NDArray[np.float64]) -> NDArray[np.float64]:
        """Starting linear predictor."""
        ...

    def mean(self, eta: NDArray[np.float64]) -> NDArray[np.float64]:
        """Inverse link."""
        ...

    def working_weights(self, mu: NDArray[np.float64]) -> NDArray[np.float64]:
        """Diagonal of V at the current mean."""
        ...

    def score_residual(
        self, response: NDArray[np.float64], mu: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        """Per-observation contribution to the score, X.T @ residual."""
        ...

    def deviance(self, response: NDArray[np.float64], mu: NDArray[np.float64]) -> float:
        """Deviance against the saturated model."""
        ...

    def total(self, response: NDArray[np.float64]) -> float:
        """Size of the data (N or sum of trials), the scale of the score."""
        ...

    def log_likelihood(self, response: NDArray[np.float64], mu: NDArray[np.float64]) -> float:
        """Exact log-likelihood, normalising constants included."""
        ...


@dataclass(frozen=True)
class Poisson:
    """Poisson counts with log link: V(mu) = mu."""

    name: str = field(default="poisson", init=False)

    def initial_eta(self, response: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.log(response + 0.5)

    def mean(self, eta: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.exp(eta)

    def working_weights(self, mu: NDArray[np.float64]) -> NDArray[np.float64]:
        return mu

    def score_residual(
        self, response: NDArray[np.float64], mu: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        return response - mu

    def deviance(self, response: NDArray[np.float64], mu: NDArray[np.float64]) -> float:
        return deviance_poisson(response, np.maximum(mu, _TINY), check_total=False)

    def total(self, response: NDArray[np.float64]) -> float:
        return float(np.sum(response))

    def log_likelihood(self, response: NDArray[np.float64], mu: NDArray[np.float64]) -> float:
        return float(np.sum(xlogy(response, mu) - mu - gammaln(response + 1.0)))


@dataclass(frozen=True, eq=False)
class Binomial:
    """
    Grouped binomial proportions with logit link.

    ``trials`` holds t_i per class; the response is y_i = s_i / t_i and
    the IRLS weight is t_i p_i (1 - p_i).
    """

    trials: NDArray[np.float64]
    name: str = field(default="binomial", init=False)

    def __post_init__(self) -> None:
        trials = np.asarray(self.trials, dtype=np.float64)
        if np.any(trials <= 0):
            raise DataError("Binomial trials must be positive")
        trials.setflags(write=False)
        object.__setattr__(self, "trials", trials)

    @classmethod
    def from_counts(
        cls, trials: ArrayLike, successes: ArrayLike
    ) -> tuple[Binomial, NDArray[np.float64]]:
        """Family and proportion response from (t, s)."""
        t = np.asarray(trials, dtype=np.float64)
        return cls(t), np.asarray(successes, dtype=np.float64) / t

    def successes(self, response: NDArray[np.float64]) -> NDArray[np.float64]:
        return self.trials * response

    def initial_eta(self, response: NDArray[np.float64]) -> NDArray[np.float64]:
        return logit((self.successes(response) + 0.5) / (self.trials + 1.0))

    def mean(self, eta: NDArray[np.float64]) -> NDArray[np.float64]:
        return expit(eta)

    def working_weights(self, mu: NDArray[np.float64]) -> NDArray[np.float64]:
        return self.trials * mu * (1.0 - mu)

    def score_residual(
        self, response: NDArray[np.float64], mu: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        return self.trials * (response - mu)

    def deviance(self, response: NDArray[np.float64], mu: NDArray[np.float64]) -> float:
        return deviance_binomial(self.trials, response, np.clip(mu, _EPS, 1.0 - _EPS))

    def total(self, response: NDArray[np.float64]) -> float:
        return float(np.sum(self.trials))

    def log_likelihood(self, response: NDArray[np.float64], mu: NDArray[np.float64]) -> float:
        s = self.successes(response)
        failures = self.trials - s
        log_choose = gammaln(self.trials + 1.0) - gammaln(s + 1.0) - gammaln(failures + 1.0)
        return float(np.sum(log_choose + xlogy(s, mu) + xlog1py(failures, -mu)))
