"""
Result documents: JSON for machines, rich tables for people.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from typing import Any

from rich.table import Table

from loglinkit.correspondence.report import CorrespondenceReport
from loglinkit.glm.inference import WaldInterval
from loglinkit.glm.irls import FitResult

FORMAT_VERSION = 1


def dumps(document: dict[str, Any]) -> str:
    """Serialize a document; identical inputs give byte-identical output."""
    return json.dumps(document, sort_keys=True, indent=2, allow_nan=False) + "\n"


def fit_document(
    command: dict[str, Any], fit: FitResult, intervals: Sequence[WaldInterval]
) -> dict[str, Any]:
    """Document for one fit: the fit itself plus Wald intervals."""
    document = fit.to_dict()
    document["intervals"] = [
        {"label": iv.label, "lower": iv.lower, "upper": iv.upper, "level": iv.level}
        for iv in intervals
    ]
    return {"format_version": FORMAT_VERSION, "command": command, "fit": document}


def report_document(command: dict[str, Any], report: CorrespondenceReport) -> dict[str, Any]:
    return {"format_version": FORMAT_VERSION, "command": command, "report": report.to_dict()}


def _number(value: float, digits: int) -> str:
    return f"{value:.{digits}f}"


def fit_table(title: str, fit: FitResult, intervals: Sequence[WaldInterval]) -> Table:
    """Parameter table for a fit."""
    level = intervals[0].level if intervals else 0.95
    table = Table(title=title, caption=f"Deviance = {fit.deviance:.4f}")
    table.add_column("Parameter")
    table.add_column("Estimate", justify="right")
    table.add_column("St. error", justify="right")
    table.add_column(f"{level:.0%} Wald interval", justify="right")
    for label, est, se, iv in zip(fit.labels, fit.estimates, fit.std_errors, intervals):
        table.add_row(
            label,
            _number(est, 8),
            _number(se, 5),
            f"({_number(iv.lower, 5)}, {_number(iv.upper, 5)})",
        )
    return table


def report_table(report: CorrespondenceReport) -> Table:
    """One row per check."""
    merge = ", ".join(report.merge) if report.merge else "none"
    table = Table(
        title=f"{report.loglinear} vs {report.logistic} (outcome {report.outcome}, merged: {merge})"
    )
    table.add_column("Check")
    table.add_column("Discrepancy", justify="right")
    table.add_column("Tolerance", justify="right")
    table.add_column("Result")
    for record in report.records:
        table.add_row(
            record.name,
            f"{record.discrepancy:.3e}",
            f"{record.tolerance:.1e}",
            "[green]pass[/green]" if record.passed else "[red]FAIL[/red]",
        )
    return table
