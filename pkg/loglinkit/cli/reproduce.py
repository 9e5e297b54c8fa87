"""
`loglinkit reproduce` - refit the bundled data and compare with published values.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
import typer
from rich.table import Table

from loglinkit.cli.common import fail, make_config
from loglinkit.cli.output import get_output
from loglinkit.cli.serialize import FORMAT_VERSION, dumps
from loglinkit.correspondence.checks import CheckRecord
from loglinkit.correspondence.pair import build_pair
from loglinkit.data import reference
from loglinkit.data.registry import EDWARDS_HAVRANEK, DatasetRegistry, get_registry
from loglinkit.exceptions import CheckFailedError, LoglinkitError
from loglinkit.formula.parser import parse_model
from loglinkit.glm.irls import FitOptions, FitResult


@dataclass(frozen=True)
class ReproducedRow:
    """Estimates and standard errors for the four reported parameters, plus the deviance."""

    family: str
    model: str
    labels: tuple[str, ...]
    estimates: tuple[float, ...]
    std_errors: tuple[float, ...]
    deviance: float

    @classmethod
    def from_fit(cls, model: str, fit: FitResult, labels: Sequence[str]) -> ReproducedRow:
        index = [fit.labels.index(label) for label in labels]
        return cls(
            family=fit.family,
            model=model,
            labels=tuple(labels),
            estimates=tuple(float(v) for v in fit.estimates[index]),
            std_errors=tuple(float(v) for v in fit.std_errors[index]),
            deviance=fit.deviance,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "model": self.model,
            "labels": list(self.labels),
            "estimates": list(self.estimates),
            "std_errors": list(self.std_errors),
            "deviance": self.deviance,
        }


@dataclass(frozen=True)
class ReproducedTable:
    key: str
    title: str
    merge: tuple[str, ...]
    rows: tuple[ReproducedRow, ...]
    published: tuple[reference.PublishedRow, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "key": self.key,
            "title": self.title,
            "merge": list(self.merge),
            "rows": [row.to_dict() for row in self.rows],
        }


def reproduce_tables(
    registry: DatasetRegistry | None = None, options: FitOptions | None = None
) -> list[ReproducedTable]:
    """
    Fit the published models to the bundled data, without and with merging.

    The data file's checksum is verified before anything is fitted.
    """
    registry = registry or get_registry()
    table = registry.load(EDWARDS_HAVRANEK.name)
    formula = parse_model(reference.LOGLINEAR_MODEL, table.names)
    layouts = (
        ("unmerged", "Outcome A, all 32 covariate classes", (), reference.UNMERGED_TABLE),
        (
            "merged",
            "Outcome A, 8 covariate classes merged over B and F",
            reference.MERGED_FACTORS,
            reference.MERGED_TABLE,
        ),
    )
    tables = []
    for key, title, merge, published in layouts:
        pair = build_pair(table, formula, reference.OUTCOME, merge, options)
        rows = (
            ReproducedRow.from_fit(
                reference.LOGLINEAR_MODEL, pair.loglinear.fit, reference.PARAMETERS
            ),
            ReproducedRow.from_fit(
                reference.LOGISTIC_MODEL, pair.logistic.fit, reference.LOGISTIC_PARAMETERS
            ),
        )
        tables.append(ReproducedTable(key, title, tuple(merge), rows, published))
    return tables


def compare_with_published(tables: Sequence[ReproducedTable]) -> list[CheckRecord]:
    """One record per (table, row, quantity) against the published values."""
    records = []
    for table in tables:
        for row, published in zip(table.rows, table.published):
            prefix = f"{table.key}/{row.family}"
            comparisons = (
                ("estimates", row.estimates, published.estimates, reference.ESTIMATE_TOLERANCE),
                ("std_errors", row.std_errors, published.std_errors, reference.STD_ERROR_TOLERANCE),
                ("deviance", (row.deviance,), (published.deviance,), reference.DEVIANCE_TOLERANCE),
            )
            for quantity, computed, expected, tol in comparisons:
                gap = float(np.max(np.abs(np.subtract(computed, expected))))
                records.append(CheckRecord(f"{prefix}/{quantity}", gap, tol, gap <= tol))
    return records


def _render(table: ReproducedTable) -> Table:
    rendered = Table(title=table.title)
    rendered.add_column("Model")
    rendered.add_column("Deviance", justify="right")
    for ll_label, lt_label in zip(reference.PARAMETERS, reference.LOGISTIC_PARAMETERS):
        rendered.add_column(f"{ll_label} / {lt_label}", justify="right")
    for row in table.rows:
        name = f"{row.family} {row.model}"
        rendered.add_row(
            f"{name} MLE", f"{row.deviance:.2f}", *(f"{v:.8f}" for v in row.estimates)
        )
        rendered.add_row("  St. error", "", *(f"{v:.5f}" for v in row.std_errors))
    return rendered


def reproduce(
    check: bool = typer.Option(False, "--check", help="Compare with published values"),
    output_format: str | None = typer.Option(
        None, "--format", help="human (tables) or structured (JSON)"
    ),
) -> None:
    """Reproduce the published estimates, standard errors and deviances."""
    output = get_output()
    config = make_config(subcommand="reproduce", check=check, output_format=output_format)

    stage = "config"
    try:
        settings = config.settings()
        stage = "fit"
        tables = reproduce_tables(options=FitOptions.from_settings(settings))
    except LoglinkitError as e:
        fail(stage, e, subject=EDWARDS_HAVRANEK.filename)

    records = compare_with_published(tables) if check else []
    passed = all(record.passed for record in records)

    if settings.output_format == "structured":
        document: dict[str, Any] = {
            "format_version": FORMAT_VERSION,
            "command": config.model_dump(mode="json", exclude_none=True),
            "tables": [table.to_dict() for table in tables],
        }
        if check:
            document["checks"] = [record.to_dict() for record in records]
            document["passed"] = passed
        output.document(dumps(document))
    else:
        for table in tables:
            output.render(_render(table))

    if not check:
        return
    if not passed:
        failed = [record.name for record in records if not record.passed]
        message = f"Mismatch with published values: {', '.join(failed)}"
        fail("check", CheckFailedError(message, failed))
    output.success("All values match the published results")
