"""
Tests for the Poisson and binomial deviance functions.
"""

import numpy as np
import pytest

from loglinkit.exceptions import DataError
from loglinkit.formula.parser import parse_model
from loglinkit.formula.terms import ModelFormula
from loglinkit.glm.deviance import deviance_binomial, deviance_poisson
from loglinkit.glm.families import Poisson
from loglinkit.glm.irls import FitOptions
from loglinkit.glm.models import fit_logistic, fit_loglinear
from loglinkit.table.contingency import ContingencyTable
from loglinkit.table.grouping import group_for_logistic


class TestDeviancePoisson:
    """Tests for deviance_poisson."""

    def test_worked_example(self) -> None:
        expected = 2 * (2 * np.log(2) + 2 * np.log(2 / 3))

        assert deviance_poisson([2, 2], [1, 3]) == pytest.approx(expected)
        assert deviance_poisson([2, 2], [1, 3]) == pytest.approx(1.15073, abs=1e-5)

    def test_saturated_is_zero(self) -> None:
        assert deviance_poisson([3, 0, 5], [3, 1e-300, 5], check_total=False) == pytest.approx(
            0.0, abs=1e-12
        )

    def test_zero_count_contributes_nothing(self) -> None:
        assert deviance_poisson([0, 4], [1, 3], check_total=False) == pytest.approx(
            2 * 4 * np.log(4 / 3)
        )

    def test_totals_must_agree(self) -> None:
        with pytest.raises(DataError, match="totals differ"):
            deviance_poisson([1, 2], [1, 3])

    def test_fitted_must_be_positive(self) -> None:
        with pytest.raises(DataError, match="positive"):
            deviance_poisson([1, 2], [0, 3], check_total=False)


class TestDevianceBinomial:
    """Tests for deviance_binomial."""

    def test_exact_fit_is_zero(self) -> None:
        assert deviance_binomial([4, 10], [0.25, 0.5], [0.25, 0.5]) == pytest.approx(0.0)

    def test_all_failures_class(self) -> None:
        """A 0/4 class only contributes through its failures."""
        value = deviance_binomial([4], [0.0], [0.2])

        assert value == pytest.approx(2 * 4 * np.log(1 / 0.8))

    def test_fitted_on_boundary(self) -> None:
        with pytest.raises(DataError, match="strictly between"):
            deviance_binomial([4], [0.5], [1.0])

    def test_proportion_out_of_range(self) -> None:
        with pytest.raises(DataError, match=r"\[0, 1\]"):
            deviance_binomial([4], [1.5], [0.5])

    def test_shape_mismatch(self) -> None:
        with pytest.raises(DataError, match="differ in shape"):
            deviance_binomial([4, 5], [0.5], [0.5])


class TestReportedDeviances:
    """Fitted models report the deviance these functions compute."""

    def test_loglinear_fit(self, chd_table: ContingencyTable, chd_formula: ModelFormula) -> None:
        _, fit = fit_loglinear(chd_formula, chd_table, FitOptions())

        assert fit.deviance == pytest.approx(
            deviance_poisson(chd_table.flat_counts(), fit.fitted), abs=1e-10
        )

    def test_logistic_fit(self, chd_table: ContingencyTable) -> None:
        data = group_for_logistic(chd_table, "A", ("B", "F"))
        formula = parse_model("C+D+E", data.names)
        _, fit = fit_logistic(formula, data, FitOptions())

        assert fit.deviance == pytest.approx(
            deviance_binomial(data.trials, data.successes / data.trials, fit.fitted), abs=1e-10
        )

    def test_unequal_totals_use_general_form(self) -> None:
        """Without an intercept the 2 sum (n - mu) term no longer cancels."""
        value = deviance_poisson([1, 2], [1, 3], check_total=False)

        assert value == pytest.approx(2 * (2 * np.log(2 / 3) + 1))

    def test_family_matches_function(self) -> None:
        counts = np.array([3.0, 0.0, 5.0])
        fitted = np.array([2.5, 0.5, 5.0])

        assert Poisson().deviance(counts, fitted) == deviance_poisson(counts, fitted)
