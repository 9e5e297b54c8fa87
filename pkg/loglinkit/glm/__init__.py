"""Poisson and binomial GLMs fitted by iteratively reweighted least squares."""

from loglinkit.glm.deviance import deviance_binomial, deviance_poisson
from loglinkit.glm.families import Binomial, FamilySpec, Poisson
from loglinkit.glm.inference import WaldInterval, intervals_from, normal_quantile, wald_intervals
from loglinkit.glm.irls import FitOptions, FitResult, fit_irls
from loglinkit.glm.likelihood import log_likelihood, score
from loglinkit.glm.models import fit_logistic, fit_loglinear

__all__ = [
    "Binomial",
    "FamilySpec",
    "FitOptions",
    "FitResult",
    "Poisson",
    "WaldInterval",
    "deviance_binomial",
    "deviance_poisson",
    "fit_irls",
    "fit_logistic",
    "fit_loglinear",
    "intervals_from",
    "log_likelihood",
    "normal_quantile",
    "score",
    "wald_intervals",
]
