"""
Fit log-linear models to tables and logistic models to grouped data.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from loglinkit.design.builder import DesignMatrix, build_logistic_design, build_loglinear_design
from loglinkit.exceptions import DataError
from loglinkit.formula.terms import ModelFormula
from loglinkit.glm.families import Binomial, Poisson
from loglinkit.glm.irls import FitOptions, FitResult, fit_irls
from loglinkit.table.contingency import ContingencyTable
from loglinkit.table.grouping import GroupedBinomialData
from loglinkit.utils.logging import get_logger

logger = get_logger(__name__)


def fit_loglinear(
    formula: ModelFormula,
    table: ContingencyTable,
    options: FitOptions | None = None,
) -> tuple[DesignMatrix, FitResult]:
    """
    Fit a Poisson log-linear model to every cell of ``table``.

    Returns:
        (X_ll, fit) with fitted means in canonical cell order
    """
    options = options or FitOptions.from_settings()
    design = build_loglinear_design(formula, table, options.rank_tolerance)
    fit = fit_irls(design, table.flat_counts(), Poisson(), options)
    return design, fit


def fit_logistic(
    formula: ModelFormula,
    data: GroupedBinomialData,
    options: FitOptions | None = None,
) -> tuple[DesignMatrix, FitResult]:
    """
    Fit a logistic regression to grouped binomial data.

    Classes with no trials are left out of the likelihood and reported in
    ``FitResult.dropped``; fitted probabilities still cover every class.

    Returns:
        (X_lt, fit) with one fitted probability per class
    """
    options = options or FitOptions.from_settings()
    design = build_logistic_design(formula, data, options.rank_tolerance)
    keep = data.nonempty_mask()
    if not keep.any():
        raise DataError("Every covariate class is empty")
    family = Binomial(data.trials[keep])
    response = data.successes[keep] / data.trials[keep]
    fit = fit_irls(design.entries[keep], response, family, options, labels=design.labels)
    if keep.all():
        return design, fit

    dropped = tuple(data.empty_classes)
    logger.info("Dropped %d empty class(es) from the logistic likelihood", len(dropped))
    fitted = family.mean(design.entries @ fit.estimates)
    return design, dataclasses.replace(fit, fitted=np.asarray(fitted), dropped=dropped)
