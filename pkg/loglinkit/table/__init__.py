"""Contingency tables, CSV ingestion and binomial regrouping."""

from __future__ import annotations

from loglinkit.table.contingency import (
    ContingencyTable,
    FactorSpec,
    IndexOrder,
    cell_grid,
    from_flat_vector,
    to_flat_vector,
)
from loglinkit.table.grouping import (
    GroupedBinomialData,
    collapse,
    group_for_logistic,
    margin_over_outcome,
)
from loglinkit.table.io import read_table_csv, write_table_csv

__all__ = [
    "ContingencyTable",
    "FactorSpec",
    "GroupedBinomialData",
    "IndexOrder",
    "cell_grid",
    "collapse",
    "from_flat_vector",
    "group_for_logistic",
    "margin_over_outcome",
    "read_table_csv",
    "to_flat_vector",
    "write_table_csv",
]
