"""
Tests for log-linear and logistic fits on tables and grouped data.

Tests focus on:
- Published estimates, standard errors and deviances for the bundled data
- Logistic estimates unchanged by merging over factors absent from the formula
- Empty covariate classes
- Agreement with a brute-force likelihood maximizer on small random tables
"""

import numpy as np
import pytest

from loglinkit.data import reference
from loglinkit.exceptions import DataError
from loglinkit.formula.parser import parse_model
from loglinkit.formula.terms import ModelFormula
from loglinkit.glm.irls import FitOptions
from loglinkit.glm.models import fit_logistic, fit_loglinear
from loglinkit.table.contingency import ContingencyTable, FactorSpec, from_flat_vector
from loglinkit.table.grouping import GroupedBinomialData, group_for_logistic
from tests.fixtures.oracle import binomial_mle, poisson_mle
from tests.fixtures.table_factory import TableFactory


class TestPublishedFits:
    """Fits of the bundled coronary heart disease data."""

    def test_loglinear_estimates(
        self, chd_table: ContingencyTable, chd_formula: ModelFormula, options: FitOptions
    ) -> None:
        _, fit = fit_loglinear(chd_formula, chd_table, options)

        for label, estimate, std_error in zip(
            reference.PARAMETERS, reference.ESTIMATES, reference.STD_ERRORS
        ):
            assert fit.estimate(label) == pytest.approx(estimate, abs=reference.ESTIMATE_TOLERANCE)
            assert fit.std_error(label) == pytest.approx(
                std_error, abs=reference.STD_ERROR_TOLERANCE
            )
        assert fit.deviance == pytest.approx(
            reference.UNMERGED_DEVIANCE, abs=reference.DEVIANCE_TOLERANCE
        )
        assert fit.family == "poisson"

    def test_logistic_unmerged(self, chd_table: ContingencyTable, options: FitOptions) -> None:
        data = group_for_logistic(chd_table, "A")
        _, fit = fit_logistic(parse_model(reference.LOGISTIC_MODEL, data.names), data, options)

        np.testing.assert_allclose(
            fit.estimates, reference.ESTIMATES, atol=reference.ESTIMATE_TOLERANCE
        )
        assert fit.deviance == pytest.approx(
            reference.UNMERGED_DEVIANCE, abs=reference.DEVIANCE_TOLERANCE
        )
        assert fit.dropped == ()

    def test_logistic_merged(self, chd_table: ContingencyTable, options: FitOptions) -> None:
        data = group_for_logistic(chd_table, "A", reference.MERGED_FACTORS)
        _, fit = fit_logistic(parse_model(reference.LOGISTIC_MODEL, data.names), data, options)

        np.testing.assert_allclose(
            fit.std_errors, reference.STD_ERRORS, atol=reference.STD_ERROR_TOLERANCE
        )
        assert fit.deviance == pytest.approx(
            reference.MERGED_DEVIANCE, abs=reference.DEVIANCE_TOLERANCE
        )

    def test_merging_leaves_estimates_unchanged(
        self, chd_table: ContingencyTable, options: FitOptions
    ) -> None:
        merged = group_for_logistic(chd_table, "A", reference.MERGED_FACTORS)
        unmerged = group_for_logistic(chd_table, "A")
        formula = parse_model(reference.LOGISTIC_MODEL, merged.names)

        _, merged_fit = fit_logistic(formula, merged, options)
        _, unmerged_fit = fit_logistic(formula, unmerged, options)

        np.testing.assert_allclose(merged_fit.estimates, unmerged_fit.estimates, rtol=1e-8)
        np.testing.assert_allclose(merged_fit.covariance, unmerged_fit.covariance, rtol=1e-8)


class TestEmptyClasses:
    """Logistic fits with classes that have no trials."""

    def test_empty_class_is_dropped(self, options: FitOptions) -> None:
        factors = [FactorSpec.binary("Y"), FactorSpec.with_levels("X", 3)]
        table = from_flat_vector([3, 4, 0, 0, 5, 2], factors)
        data = group_for_logistic(table, "Y")

        design, fit = fit_logistic(parse_model("1", data.names), data, options)

        assert design.n_rows == 3
        assert fit.dropped == ((1,),)
        np.testing.assert_allclose(fit.fitted, [6 / 14] * 3)
        assert fit.to_dict()["dropped"] == [[1]]

    def test_all_classes_empty(self, options: FitOptions) -> None:
        empty = GroupedBinomialData((FactorSpec.binary("X"),), np.zeros(2), np.zeros(2), "Y")

        with pytest.raises(DataError, match="Every covariate class is empty"):
            fit_logistic(parse_model("1", empty.names), empty, options)


class TestBruteForceOracle:
    """IRLS estimates agree with derivative-free maximization of the exact likelihood."""

    @pytest.mark.parametrize("seed", range(10))
    def test_poisson(self, seed: int, options: FitOptions) -> None:
        rng = np.random.default_rng(seed)
        counts = rng.integers(1, 40, size=8)
        table = TableFactory.binary_table(counts.tolist(), "ABC")
        design, fit = fit_loglinear(parse_model("AB+AC+BC", table.names), table, options)

        expected = poisson_mle(design.entries, table.flat_counts())

        np.testing.assert_allclose(fit.estimates, expected, atol=1e-4)

    @pytest.mark.parametrize("seed", range(10))
    def test_logistic(self, seed: int, options: FitOptions) -> None:
        rng = np.random.default_rng(100 + seed)
        counts = rng.integers(1, 40, size=16)
        table = TableFactory.binary_table(counts.tolist(), "ACDE")
        data = group_for_logistic(table, "A")
        design, fit = fit_logistic(parse_model("C+D+E", data.names), data, options)

        expected = binomial_mle(design.entries, data.trials, data.successes)

        np.testing.assert_allclose(fit.estimates, expected, atol=1e-4)
