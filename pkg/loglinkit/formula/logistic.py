"""
From a log-linear formula to the logistic regression it implies.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from loglinkit.exceptions import FormulaError
from loglinkit.formula.terms import ModelFormula


def derive_logistic_formula(ll: ModelFormula, outcome: str) -> ModelFormula:
    """
    Derive the logistic formula for a binary outcome.

    Every log-linear term containing the outcome contributes the term with
    the outcome removed; the outcome's main effect becomes the intercept.
    Factors that never interact with the outcome disappear.

    Args:
        ll: Log-linear formula
        outcome: Name of the binary outcome factor

    Returns:
        ModelFormula over the covariates that interact with the outcome

    Raises:
        FormulaError: If the outcome is absent or has no main effect
    """
    if outcome not in ll.factors:
        raise FormulaError(f"Outcome '{outcome}' does not appear in the log-linear model")
    if frozenset({outcome}) not in ll.terms:
        raise FormulaError(
            f"Outcome '{outcome}' has no main effect; the implied logistic model has no intercept"
        )
    stripped = [term - {outcome} for term in ll.terms if outcome in term and len(term) > 1]
    covariates = [name for name in ll.factors if name != outcome]
    return ModelFormula.from_terms(stripped, factors=covariates)


@dataclass(frozen=True)
class Eligibility:
    """Result of the eligibility test, with the term that decided it."""

    eligible: bool
    outcome: str
    required_term: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.eligible

    @property
    def diagnostic(self) -> str:
        term = "".join(self.required_term) or "(intercept)"
        if self.eligible:
            return f"contains the full interaction {term} of the non-outcome factors"
        return f"missing the full interaction {term} of the non-outcome factors"


def is_correspondence_eligible(
    ll: ModelFormula, outcome: str, factors: Sequence[str] | None = None
) -> Eligibility:
    """
    Check whether ``ll`` contains the full interaction of all non-outcome factors.

    Args:
        ll: Log-linear formula
        outcome: Outcome factor name
        factors: All factors of the table; defaults to the formula's factors

    Returns:
        Eligibility, truthy when the correspondence results apply
    """
    universe = tuple(factors) if factors is not None else ll.factors
    required = tuple(name for name in universe if name != outcome)
    return Eligibility(
        eligible=ll.has_term(required),
        outcome=outcome,
        required_term=required,
    )
