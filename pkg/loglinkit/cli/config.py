"""
Validated per-invocation configuration for the CLI commands.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from loglinkit.conf import load_settings
from loglinkit.conf.settings import Settings


class RunConfig(BaseModel):
    """Everything one command invocation needs, checked before any work starts."""

    model_config = ConfigDict(frozen=True)

    subcommand: Literal["fit", "correspond", "reproduce"]
    data: str | None = None
    model: str | None = None
    family: Literal["poisson", "binomial"] | None = None
    outcome: str | None = None
    merge: tuple[str, ...] = ()
    tolerance: float | None = None
    max_iterations: int | None = None
    alpha: float | None = None
    output_format: Literal["human", "structured"] | None = None
    check: bool = False

    @field_validator("merge", mode="before")
    @classmethod
    def _split_merge(cls, value: Any) -> Any:
        if value is None:
            return ()
        if isinstance(value, str):
            value = [value]
        names: list[str] = []
        for item in value:
            names.extend(part.strip() for part in str(item).split(",") if part.strip())
        return tuple(names)

    @field_validator("model")
    @classmethod
    def _non_empty_model(cls, value: str | None) -> str | None:
        if value is not None and not value.strip():
            raise ValueError("model must not be empty")
        return value

    @model_validator(mode="after")
    def _consistent(self) -> RunConfig:
        if self.merge and not (self.subcommand == "correspond" or self.family == "binomial"):
            raise ValueError("--merge is only valid for binomial fits and correspond")
        if self.outcome and self.subcommand == "fit" and self.family != "binomial":
            raise ValueError("--outcome is only valid for binomial fits and correspond")
        if self.subcommand == "correspond" or self.family == "binomial":
            if not self.outcome:
                raise ValueError("--outcome is required for binomial fits and correspond")
        if self.subcommand in ("fit", "correspond") and self.model is None:
            raise ValueError("--model is required")
        if self.outcome and self.outcome in self.merge:
            raise ValueError(f"Cannot merge over the outcome '{self.outcome}'")
        return self

    def settings(self) -> Settings:
        """Settings with this invocation's overrides applied."""
        tolerance_field = "score_tolerance" if self.subcommand == "fit" else "verify_tolerance"
        return load_settings(
            **{
                tolerance_field: self.tolerance,
                "max_iterations": self.max_iterations,
                "alpha": self.alpha,
                "output_format": self.output_format,
            }
        )
