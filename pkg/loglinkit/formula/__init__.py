"""Model formulas: parsing, hierarchical closure and logistic derivation."""

from __future__ import annotations

from loglinkit.formula.logistic import (
    Eligibility,
    derive_logistic_formula,
    is_correspondence_eligible,
)
from loglinkit.formula.parser import format_model, parse_model
from loglinkit.formula.terms import ModelFormula, Term, hierarchical_closure, is_closed

__all__ = [
    "Eligibility",
    "ModelFormula",
    "Term",
    "derive_logistic_formula",
    "format_model",
    "hierarchical_closure",
    "is_closed",
    "is_correspondence_eligible",
    "parse_model",
]
