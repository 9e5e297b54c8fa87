"""
Tests for the log-likelihood and its analytic score.

The score is cross-checked against central finite differences at random
points around the MLE.
"""

from collections.abc import Callable

import numpy as np
import pytest

from loglinkit.correspondence.pair import CorrespondencePair
from loglinkit.glm.families import Binomial, Poisson
from loglinkit.glm.likelihood import log_likelihood, score

STEP = 1e-5


def central_difference(function: Callable[[np.ndarray], float], beta: np.ndarray) -> np.ndarray:
    gradient = np.empty_like(beta)
    for j in range(beta.size):
        shift = np.zeros_like(beta)
        shift[j] = STEP
        gradient[j] = (function(beta + shift) - function(beta - shift)) / (2 * STEP)
    return gradient


class TestScore:
    """Tests for score against finite differences."""

    @pytest.mark.parametrize("seed", range(5))
    def test_poisson(self, chd_pair: CorrespondencePair, seed: int) -> None:
        design = chd_pair.loglinear.design
        counts = chd_pair.table.flat_counts()
        rng = np.random.default_rng(seed)
        beta = chd_pair.loglinear.fit.estimates + rng.normal(0, 0.05, design.n_columns)

        numeric = central_difference(lambda b: log_likelihood(b, design, counts, Poisson()), beta)
        analytic = score(beta, design, counts, Poisson())

        np.testing.assert_allclose(analytic, numeric, rtol=1e-5, atol=1e-4)

    @pytest.mark.parametrize("seed", range(5))
    def test_binomial(self, chd_pair: CorrespondencePair, seed: int) -> None:
        data = chd_pair.logistic.data
        assert data is not None
        design = chd_pair.logistic.design
        family, response = Binomial.from_counts(data.trials, data.successes)
        rng = np.random.default_rng(seed)
        beta = chd_pair.logistic.fit.estimates + rng.normal(0, 0.1, design.n_columns)

        numeric = central_difference(lambda b: log_likelihood(b, design, response, family), beta)

        analytic = score(beta, design, response, family)

        np.testing.assert_allclose(analytic, numeric, rtol=1e-5, atol=1e-4)

    def test_zero_at_mle(self, chd_pair: CorrespondencePair) -> None:
        fit = chd_pair.loglinear.fit
        counts = chd_pair.table.flat_counts()

        gradient = score(fit.estimates, chd_pair.loglinear.design, counts, Poisson())

        assert np.max(np.abs(gradient)) < 1e-8


class TestLogLikelihood:
    """Tests for log_likelihood."""

    def test_single_poisson_cell(self) -> None:
        """log P(N = 3 | mu = 2) = 3 log 2 - 2 - log 3!."""
        value = log_likelihood([np.log(2.0)], np.ones((1, 1)), [3.0], Poisson())

        assert value == pytest.approx(3 * np.log(2) - 2 - np.log(6))

    def test_maximized_at_mle(self, chd_pair: CorrespondencePair) -> None:
        fit = chd_pair.loglinear.fit
        design = chd_pair.loglinear.design
        counts = chd_pair.table.flat_counts()
        best = log_likelihood(fit.estimates, design, counts, Poisson())

        for seed in range(3):
            nudge = np.random.default_rng(seed).normal(0, 0.01, fit.estimates.size)
            assert log_likelihood(fit.estimates + nudge, design, counts, Poisson()) < best
