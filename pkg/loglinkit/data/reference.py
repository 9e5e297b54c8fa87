"""
Published results for the bundled coronary heart disease data.

Estimates are printed to 8 decimals, standard errors to 5 and deviances
to 2, which sets the comparison tolerances below.
"""

from __future__ import annotations

from dataclasses import dataclass

LOGLINEAR_MODEL = "AC+AD+AE+BCDEF"
LOGISTIC_MODEL = "C+D+E"
OUTCOME = "A"
MERGED_FACTORS = ("B", "F")

# Rows reported for the outcome main effect and its interactions.
PARAMETERS = ("A", "AC", "AD", "AE")
LOGISTIC_PARAMETERS = ("(Intercept)", "C", "D", "E")

ESTIMATES = (-0.41399925, 0.55009951, -0.36836287, 0.48934383)
STD_ERRORS = (0.08922, 0.09579, 0.09667, 0.09731)

# Log-linear fit and the 32-class logistic fit share a deviance;
# the logistic fit on the 8 classes merged over B and F does not.
UNMERGED_DEVIANCE = 33.51
MERGED_DEVIANCE = 3.47

ESTIMATE_TOLERANCE = 1e-6
STD_ERROR_TOLERANCE = 5e-6
DEVIANCE_TOLERANCE = 5e-3

# Grouped data for outcome A: trials and successes per covariate class.
UNMERGED_TRIALS = (
    84, 179, 274, 35, 47, 113, 176, 16, 55, 136, 130, 20, 49, 130, 114, 23,
    12, 30, 26, 5, 7, 19, 31, 7, 10, 28, 25, 5, 4, 24, 19, 8,
)  # fmt: skip
UNMERGED_SUCCESSES = (
    40, 67, 145, 23, 12, 33, 67, 9, 32, 66, 80, 13, 25, 57, 63, 16,
    7, 9, 17, 4, 3, 8, 17, 2, 3, 14, 16, 3, 0, 11, 14, 4,
)  # fmt: skip
MERGED_TRIALS = (305, 340, 186, 230, 229, 180, 207, 164)
MERGED_SUCCESSES = (123, 189, 56, 95, 115, 112, 93, 97)


@dataclass(frozen=True)
class PublishedRow:
    """One published row: estimates and standard errors for PARAMETERS, plus a deviance."""

    model: str
    deviance: float
    estimates: tuple[float, ...] = ESTIMATES
    std_errors: tuple[float, ...] = STD_ERRORS


UNMERGED_TABLE = (
    PublishedRow(LOGLINEAR_MODEL, UNMERGED_DEVIANCE),
    PublishedRow(LOGISTIC_MODEL, UNMERGED_DEVIANCE),
)
MERGED_TABLE = (
    PublishedRow(LOGLINEAR_MODEL, UNMERGED_DEVIANCE),
    PublishedRow(LOGISTIC_MODEL, MERGED_DEVIANCE),
)
