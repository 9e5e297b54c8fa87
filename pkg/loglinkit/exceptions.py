"""
Base exception classes for loglinkit.

Every error carries the process exit code the CLI uses for it.
"""

from __future__ import annotations

from pathlib import Path


class LoglinkitError(Exception):
    """Base exception for all loglinkit errors."""

    exit_code: int = 1


class DataError(LoglinkitError):
    """Raised when table data cannot be read or is invalid."""

    exit_code = 3

    def __init__(self, message: str, path: Path | str | None = None):
        self.path = Path(path) if path is not None else None
        if self.path is not None:
            message = f"{self.path}: {message}"
        super().__init__(message)


class FormulaError(LoglinkitError):
    """Raised when a model formula cannot be parsed or transformed."""

    exit_code = 4

    def __init__(self, message: str, spec: str | None = None, position: int | None = None):
        self.spec = spec
        self.position = position
        if spec is not None and position is not None:
            message = f"{message} (at position {position} in '{spec}')"
        elif spec is not None:
            message = f"{message} (in '{spec}')"
        super().__init__(message)


class IneligibleModelError(LoglinkitError):
    """Raised when the correspondence results are requested for an ineligible model."""

    exit_code = 5

    def __init__(self, outcome: str, missing_term: tuple[str, ...]):
        self.outcome = outcome
        self.missing_term = missing_term
        term = "".join(missing_term) if missing_term else "(intercept)"
        super().__init__(
            f"Log-linear model is not eligible for outcome '{outcome}': "
            f"it lacks the full interaction {term} of the non-outcome factors"
        )


class DesignError(LoglinkitError):
    """Raised when a design or incidence matrix cannot be built."""

    exit_code = 6


class FitError(LoglinkitError):
    """Base class for model fitting failures."""

    exit_code = 7


class ConvergenceError(FitError):
    """Raised when IRLS does not converge within the iteration limit."""

    def __init__(self, iterations: int, max_score_residual: float, deviance: float):
        self.iterations = iterations
        self.max_score_residual = max_score_residual
        self.deviance = deviance
        super().__init__(
            f"IRLS did not converge after {iterations} iterations "
            f"(max score residual {max_score_residual:.3e}, deviance {deviance:.6g})"
        )


class MLENotFoundError(FitError):
    """Raised when estimates diverge, which signals the MLE may not exist."""

    def __init__(self, iteration: int, max_abs_estimate: float, bound: float):
        self.iteration = iteration
        self.max_abs_estimate = max_abs_estimate
        self.bound = bound
        super().__init__(
            f"MLE may not exist: |estimate| reached {max_abs_estimate:.4g} > {bound:g} "
            f"at iteration {iteration} (zero cells or separation?)"
        )


class SingularInformationError(FitError):
    """Raised when the weighted normal equations are singular."""


class CheckFailedError(LoglinkitError):
    """Raised when correspondence or reproduction checks fail."""

    exit_code = 8

    def __init__(self, message: str, failed: list[str] | None = None):
        self.failed = failed or []
        super().__init__(message)


class ChecksumError(LoglinkitError):
    """Raised when a bundled data file does not match its recorded checksum."""

    exit_code = 9

    def __init__(self, path: Path, expected: str, actual: str):
        self.path = path
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"Checksum mismatch for {path.name}: expected {expected[:12]}…, got {actual[:12]}…"
        )


class ConfigError(LoglinkitError):
    """Raised when configuration is invalid or missing."""

    exit_code = 10
