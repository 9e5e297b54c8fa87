"""Numerical verification of the log-linear / logistic correspondence."""

from loglinkit.correspondence.checks import (
    CheckRecord,
    fitted_probability_identity,
    verify_deviance_equality,
    verify_margin_totals,
    verify_merged_deviance,
    verify_mle_equality,
    verify_std_error_equality,
    verify_wald_intervals,
)
from loglinkit.correspondence.implied import (
    implied_beta,
    implied_beta_covariance,
    implied_wald_intervals,
)
from loglinkit.correspondence.pair import CorrespondencePair, FittedModel, build_pair
from loglinkit.correspondence.report import CorrespondenceReport, verify_correspondence

__all__ = [
    "CheckRecord",
    "CorrespondencePair",
    "CorrespondenceReport",
    "FittedModel",
    "build_pair",
    "fitted_probability_identity",
    "implied_beta",
    "implied_beta_covariance",
    "implied_wald_intervals",
    "verify_correspondence",
    "verify_deviance_equality",
    "verify_margin_totals",
    "verify_merged_deviance",
    "verify_mle_equality",
    "verify_std_error_equality",
    "verify_wald_intervals",
]
