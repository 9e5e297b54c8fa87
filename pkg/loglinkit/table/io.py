"""
CSV ingestion and export of contingency tables.

Layout: a header of factor names plus a literal ``count`` column, then
one row per cell.
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

import numpy as np
import pandas as pd

from loglinkit.exceptions import DataError
from loglinkit.table.contingency import ContingencyTable, FactorSpec

COUNT_COLUMN = "count"


def _parse_count(raw: str, row: int, path: Path) -> int:
    text = raw.strip()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise DataError(f"Row {row}: count '{raw}' is not a number", path=path) from None
    if not np.isfinite(value) or value != int(value):
        raise DataError(f"Row {row}: fractional count '{raw}' is not allowed", path=path)
    return int(value)


def read_table_csv(
    path: Path | str, factors: Sequence[FactorSpec] | None = None
) -> ContingencyTable:
    """
    Read a contingency table from CSV.

    Args:
        path: CSV file path
        factors: Factor specifications in column order. When omitted, level
                 labels are taken in order of first appearance, so the first
                 label seen for a factor is its reference level.

    Returns:
        ContingencyTable

    Raises:
        DataError: If the file is unreadable or does not describe every cell exactly once
    """
    path = Path(path)
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    except FileNotFoundError:
        raise DataError("File not found", path=path) from None
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise DataError(f"Cannot read CSV: {e}", path=path) from e

    frame.columns = [str(column).strip() for column in frame.columns]
    if COUNT_COLUMN not in frame.columns:
        raise DataError(f"Missing '{COUNT_COLUMN}' column", path=path)
    names = [column for column in frame.columns if column != COUNT_COLUMN]
    if not names:
        raise DataError("No factor columns", path=path)

    if factors is None:
        specs = []
        for name in names:
            labels = tuple(dict.fromkeys(label.strip() for label in frame[name]))
            try:
                specs.append(FactorSpec(name, labels))
            except DataError as e:
                raise DataError(str(e), path=path) from None
        factors = specs
    else:
        factors = list(factors)
        if [f.name for f in factors] != names:
            raise DataError(
                f"Columns {names} do not match factors {[f.name for f in factors]}", path=path
            )

    shape = tuple(f.n_levels for f in factors)
    counts = np.zeros(shape, dtype=np.int64)
    seen = np.zeros(shape, dtype=bool)
    for row_number, record in enumerate(frame.itertuples(index=False), start=2):
        values = dict(zip(frame.columns, record))
        try:
            cell = tuple(f.index_of(values[f.name].strip()) for f in factors)
        except DataError as e:
            raise DataError(f"Row {row_number}: {e}", path=path) from None
        if seen[cell]:
            raise DataError(f"Row {row_number}: duplicate cell {cell}", path=path)
        count = _parse_count(values[COUNT_COLUMN], row_number, path)
        if count < 0:
            raise DataError(f"Row {row_number}: negative count {count}", path=path)
        counts[cell] = count
        seen[cell] = True

    if not seen.all():
        missing = int((~seen).sum())
        raise DataError(f"{missing} cell(s) missing; every cell must be listed", path=path)
    try:
        return ContingencyTable(factors=tuple(factors), counts=counts)
    except DataError as e:
        raise DataError(str(e), path=path) from None


def write_table_csv(table: ContingencyTable, path: Path | str) -> None:
    """Write a table in canonical cell order (first factor fastest)."""
    cells = table.cells()
    frame = pd.DataFrame(
        {
            factor.name: [factor.levels[j] for j in cells[:, axis]]
            for axis, factor in enumerate(table.factors)
        }
    )
    frame[COUNT_COLUMN] = table.flat_counts()
    frame.to_csv(Path(path), index=False, lineterminator="\n")
