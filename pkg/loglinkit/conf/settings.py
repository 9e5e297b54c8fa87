"""
Numerical and output settings, read from the environment.
"""

from __future__ import annotations

from typing import Literal

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Solver and verification settings.

    Every field can be set with a ``LOGLINKIT_`` environment variable
    (e.g. ``LOGLINKIT_MAX_ITERATIONS=200``), a ``.env`` file, or the
    ``[tool.loglinkit]`` table of ``loglinkit.toml``.
    """

    model_config = SettingsConfigDict(
        env_prefix="LOGLINKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # IRLS convergence
    score_tolerance: float = 1e-10
    deviance_tolerance: float = 1e-12
    max_iterations: int = 100
    divergence_bound: float = 30.0

    # Design checks
    rank_tolerance: float = 1e-8

    # Correspondence checks
    verify_tolerance: float = 1e-8
    alpha: float = 0.05

    output_format: Literal["human", "structured"] = "human"

    @field_validator(
        "score_tolerance",
        "deviance_tolerance",
        "divergence_bound",
        "rank_tolerance",
        "verify_tolerance",
    )
    @classmethod
    def _positive(cls, value: float) -> float:
        if value <= 0:
            raise ValueError("must be positive")
        return value

    @field_validator("max_iterations")
    @classmethod
    def _at_least_one(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be at least 1")
        return value

    @field_validator("alpha")
    @classmethod
    def _open_unit_interval(cls, value: float) -> float:
        if not 0 < value < 1:
            raise ValueError("must lie strictly between 0 and 1")
        return value
