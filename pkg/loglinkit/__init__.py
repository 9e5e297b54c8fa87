"""
loglinkit - Poisson log-linear and binomial logistic models for contingency
tables, and numerical checks that the two agree.
"""

from __future__ import annotations

__version__ = "0.1.0"

from loglinkit.correspondence import (
    CorrespondencePair,
    CorrespondenceReport,
    build_pair,
    verify_correspondence,
)
from loglinkit.design import build_logistic_design, build_loglinear_design, incidence_matrix
from loglinkit.exceptions import LoglinkitError
from loglinkit.formula import derive_logistic_formula, is_correspondence_eligible, parse_model
from loglinkit.glm import FitOptions, FitResult, fit_irls, fit_logistic, fit_loglinear
from loglinkit.table import (
    ContingencyTable,
    FactorSpec,
    GroupedBinomialData,
    group_for_logistic,
    read_table_csv,
)

__all__ = [
    "ContingencyTable",
    "CorrespondencePair",
    "CorrespondenceReport",
    "FactorSpec",
    "FitOptions",
    "FitResult",
    "GroupedBinomialData",
    "LoglinkitError",
    "__version__",
    "build_logistic_design",
    "build_loglinear_design",
    "build_pair",
    "derive_logistic_formula",
    "fit_irls",
    "fit_logistic",
    "fit_loglinear",
    "group_for_logistic",
    "incidence_matrix",
    "is_correspondence_eligible",
    "parse_model",
    "read_table_csv",
    "verify_correspondence",
]
