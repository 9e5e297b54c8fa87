"""
Helpers shared by the CLI commands: config validation, data loading, failure exits.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, NoReturn

import typer
from pydantic import ValidationError

from loglinkit.cli.config import RunConfig
from loglinkit.cli.output import OutputLevel, get_output
from loglinkit.data.registry import get_registry
from loglinkit.exceptions import DataError
from loglinkit.table.contingency import ContingencyTable
from loglinkit.table.io import read_table_csv
from loglinkit.utils.errors import ErrorFormatter

DEFAULT_DATA = "edwards_havranek_m2"


def make_config(**values: Any) -> RunConfig:
    """Validate command options, turning problems into usage errors (exit 2)."""
    try:
        return RunConfig(**values)
    except ValidationError as e:
        messages = "; ".join(str(err["msg"]).removeprefix("Value error, ") for err in e.errors())
        raise typer.BadParameter(messages) from None


def load_table(source: str) -> ContingencyTable:
    """
    Read a table from a CSV path or a bundled dataset name.

    An existing file wins over a bundled dataset of the same name.
    """
    path = Path(source)
    if path.exists():
        get_output().verbose(f"Reading {path}")
        return read_table_csv(path)
    registry = get_registry()
    if registry.has(path.name):
        get_output().verbose(f"Using bundled dataset {registry.get(path.name).name}")
        return registry.load(path.name)
    raise DataError("File not found", path=path)


def fail(stage: str, error: Exception, subject: str | None = None) -> NoReturn:
    """Print a formatted error and exit with the error's exit code."""
    output = get_output()
    original = error if output.level == OutputLevel.DEBUG else None
    ErrorFormatter().print_error(stage, error, subject, original)
    raise typer.Exit(getattr(error, "exit_code", 1))
