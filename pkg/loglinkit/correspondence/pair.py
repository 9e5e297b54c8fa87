"""
A log-linear fit together with the logistic regression it implies.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from loglinkit.design.builder import DesignMatrix
from loglinkit.design.incidence import IncidenceMatrix, incidence_matrix
from loglinkit.formula.logistic import (
    Eligibility,
    derive_logistic_formula,
    is_correspondence_eligible,
)
from loglinkit.formula.terms import ModelFormula
from loglinkit.glm.irls import FitOptions, FitResult
from loglinkit.glm.models import fit_logistic, fit_loglinear
from loglinkit.table.contingency import ContingencyTable
from loglinkit.table.grouping import GroupedBinomialData, group_for_logistic
from loglinkit.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class FittedModel:
    """A formula, its design, the data it was fitted to and the fit."""

    formula: ModelFormula
    design: DesignMatrix
    fit: FitResult
    data: GroupedBinomialData | None = None


@dataclass(frozen=True, eq=False)
class CorrespondencePair:
    """
    Both sides of the correspondence for one table and outcome.

    ``unmerged`` holds the logistic fit on the unmerged grouping when
    ``merge`` is non-empty (for the deviance comparison).
    """

    table: ContingencyTable
    outcome: str
    merge: tuple[str, ...]
    loglinear: FittedModel
    logistic: FittedModel
    incidence: IncidenceMatrix
    eligibility: Eligibility
    unmerged: FittedModel | None = None

    @property
    def eligible(self) -> bool:
        return bool(self.eligibility)


def build_pair(
    table: ContingencyTable,
    ll_formula: ModelFormula,
    outcome: str,
    merge: Iterable[str] = (),
    options: FitOptions | None = None,
) -> CorrespondencePair:
    """
    Fit a log-linear model and the logistic regression it implies.

    Args:
        table: Contingency table
        ll_formula: Log-linear formula
        outcome: Binary outcome factor
        merge: Factors to merge over in the logistic grouping
        options: IRLS options shared by all fits

    Returns:
        CorrespondencePair (built for ineligible models too; the checks refuse them)
    """
    options = options or FitOptions.from_settings()
    merge = tuple(name for name in table.names if name in set(merge))
    eligibility = is_correspondence_eligible(ll_formula, outcome, table.names)
    if not eligibility:
        logger.warning("Model %s with outcome %s: %s", ll_formula, outcome, eligibility.diagnostic)
    lt_formula = derive_logistic_formula(ll_formula, outcome)

    ll_design, ll_fit = fit_loglinear(ll_formula, table, options)
    data = group_for_logistic(table, outcome, merge)
    lt_design, lt_fit = fit_logistic(lt_formula, data, options)

    unmerged = None
    if merge:
        full = group_for_logistic(table, outcome)
        full_design, full_fit = fit_logistic(lt_formula, full, options)
        unmerged = FittedModel(lt_formula, full_design, full_fit, full)

    incidence = incidence_matrix(
        ll_formula, outcome, ll_design.column_labels, lt_design.column_labels
    )
    return CorrespondencePair(
        table=table,
        outcome=outcome,
        merge=merge,
        loglinear=FittedModel(ll_formula, ll_design, ll_fit),
        logistic=FittedModel(lt_formula, lt_design, lt_fit, data),
        incidence=incidence,
        eligibility=eligibility,
        unmerged=unmerged,
    )
