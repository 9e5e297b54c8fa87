"""
Corner-point design matrices for log-linear and logistic models.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike, NDArray

from loglinkit.design.labels import ParameterLabel, parameter_labels
from loglinkit.exceptions import DesignError
from loglinkit.formula.terms import ModelFormula
from loglinkit.table.contingency import ContingencyTable, cell_grid
from loglinkit.table.grouping import GroupedBinomialData
from loglinkit.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_RANK_TOLERANCE = 1e-8


@dataclass(frozen=True, eq=False)
class DesignMatrix:
    """
    A dense 0/1 design matrix with labelled rows and columns.

    Rows are cross-classifications of ``row_factors`` (``row_levels`` holds
    one level index per factor), columns are parameters.
    """

    entries: NDArray[np.float64]
    column_labels: tuple[ParameterLabel, ...]
    row_factors: tuple[str, ...]
    row_levels: NDArray[np.int64]

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=np.float64)
        row_levels = np.asarray(self.row_levels, dtype=np.int64).reshape(
            entries.shape[0], len(self.row_factors)
        )
        if entries.ndim != 2 or entries.shape[1] != len(self.column_labels):
            raise DesignError(
                f"Design has shape {entries.shape} but {len(self.column_labels)} column labels"
            )
        for array in (entries, row_levels):
            array.setflags(write=False)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "row_levels", row_levels)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape  # type: ignore[return-value]

    @property
    def n_rows(self) -> int:
        return self.shape[0]

    @property
    def n_columns(self) -> int:
        return self.shape[1]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(str(label) for label in self.column_labels)

    def column_index(self, label: ParameterLabel | str) -> int:
        """Position of a column given its label or rendered name."""
        wanted = str(label)
        for index, candidate in enumerate(self.column_labels):
            if str(candidate) == wanted:
                return index
        raise DesignError(f"No column labelled '{wanted}'")

    def select(
        self, rows: Sequence[int] | None = None, columns: Sequence[int] | None = None
    ) -> DesignMatrix:
        """Sub-matrix (or permutation) by row and column positions."""
        row_index = np.arange(self.n_rows) if rows is None else np.asarray(rows, dtype=np.int64)
        col_index = (
            np.arange(self.n_columns) if columns is None else np.asarray(columns, dtype=np.int64)
        )
        return DesignMatrix(
            entries=self.entries[np.ix_(row_index, col_index)],
            column_labels=tuple(self.column_labels[j] for j in col_index),
            row_factors=self.row_factors,
            row_levels=self.row_levels[row_index],
        )

    def dump(self) -> str:
        """Row-per-line, space-separated 0/1 text, as printed for golden comparison."""
        return "\n".join(" ".join(str(int(v)) for v in row) for row in self.entries) + "\n"


def matrix_rank(entries: ArrayLike, tolerance: float = DEFAULT_RANK_TOLERANCE) -> int:
    """
    Numerical rank from a column-pivoted QR decomposition.

    Args:
        entries: Matrix
        tolerance: Pivots below ``tolerance`` times the largest pivot count as zero

    Returns:
        Rank
    """
    matrix = np.asarray(entries, dtype=np.float64)
    if matrix.size == 0:
        return 0
    r, _ = scipy.linalg.qr(matrix, mode="r", pivoting=True)
    pivots = np.abs(np.diag(r))
    if pivots.size == 0 or pivots[0] == 0.0:
        return 0
    return int(np.sum(pivots > tolerance * pivots.max()))


def parse_dump(text: str) -> NDArray[np.float64]:
    """Read a matrix written by :meth:`DesignMatrix.dump`."""
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    return np.array([[float(v) for v in row] for row in rows], dtype=np.float64)


def _corner_point_entries(
    labels: Iterable[ParameterLabel], row_factors: Sequence[str], row_levels: NDArray[np.int64]
) -> NDArray[np.float64]:
    columns = []
    for label in labels:
        column = np.ones(row_levels.shape[0], dtype=bool)
        for name, level in zip(label.term, label.levels):
            column &= row_levels[:, row_factors.index(name)] == level
        columns.append(column)
    return np.column_stack(columns).astype(np.float64)


def _check_rank(design: DesignMatrix, tolerance: float, what: str) -> None:
    rank = matrix_rank(design.entries, tolerance)
    if rank < design.n_columns:
        raise DesignError(
            f"{what} design is rank deficient: rank {rank} < {design.n_columns} columns"
        )


def _check_factors(formula: ModelFormula, available: Sequence[str], what: str) -> None:
    missing = [name for name in formula.factors if name not in available]
    if missing:
        raise DesignError(
            f"{what} formula uses factors not present in the data: {', '.join(missing)}"
        )


def build_loglinear_design(
    formula: ModelFormula,
    table: ContingencyTable,
    rank_tolerance: float = DEFAULT_RANK_TOLERANCE,
) -> DesignMatrix:
    """
    Build X_ll: one row per cell of ``table``, one column per parameter.

    Args:
        formula: Log-linear formula
        table: Contingency table (rows follow its canonical cell order)
        rank_tolerance: Relative pivot threshold for the rank check

    Returns:
        DesignMatrix

    Raises:
        DesignError: If the formula does not fit the table or the design is rank deficient
    """
    _check_factors(formula, table.names, "Log-linear")
    levels = {factor.name: factor.n_levels for factor in table.factors}
    labels = parameter_labels(formula, levels)
    row_levels = table.cells()
    design = DesignMatrix(
        entries=_corner_point_entries(labels, table.names, row_levels),
        column_labels=tuple(labels),
        row_factors=table.names,
        row_levels=row_levels,
    )
    _check_rank(design, rank_tolerance, "Log-linear")
    logger.debug("Built log-linear design %dx%d for %s", *design.shape, formula)
    return design


def build_logistic_design(
    formula: ModelFormula,
    data: GroupedBinomialData,
    rank_tolerance: float = DEFAULT_RANK_TOLERANCE,
) -> DesignMatrix:
    """
    Build X_lt: one row per covariate class of ``data``.

    Args:
        formula: Logistic formula over retained factors of ``data``
        data: Grouped binomial data
        rank_tolerance: Relative pivot threshold for the rank check

    Returns:
        DesignMatrix
    """
    _check_factors(formula, data.names, "Logistic")
    levels = {factor.name: factor.n_levels for factor in data.factors}
    labels = parameter_labels(formula, levels)
    row_levels = data.classes()
    design = DesignMatrix(
        entries=_corner_point_entries(labels, data.names, row_levels),
        column_labels=tuple(labels),
        row_factors=data.names,
        row_levels=row_levels,
    )
    _check_rank(design, rank_tolerance, "Logistic")
    logger.debug("Built logistic design %dx%d for %s", *design.shape, formula)
    return design


def expanded_logistic_design(
    merged_design: DesignMatrix,
    table: ContingencyTable,
    outcome: str,
    merge: Iterable[str] = (),
) -> DesignMatrix:
    """
    Repeat the rows of a merged logistic design over the unmerged classes.

    Each unmerged covariate class (all factors but the outcome) gets the
    row of the merged class that contains it.

    Args:
        merged_design: Logistic design over the merged classes
        table: Source table
        outcome: Outcome factor
        merge: Factors that were merged

    Returns:
        DesignMatrix with one row per unmerged class
    """
    merged = set(merge)
    unmerged_factors = tuple(f for f in table.factors if f.name != outcome)
    unmerged_names = tuple(f.name for f in unmerged_factors)
    if tuple(n for n in unmerged_names if n not in merged) != merged_design.row_factors:
        raise DesignError(
            f"Merged design rows {merged_design.row_factors} do not match the table "
            f"without {outcome} and {sorted(merged)}"
        )
    grid = cell_grid([f.n_levels for f in unmerged_factors])
    kept = [i for i, name in enumerate(unmerged_names) if name not in merged]
    kept_shape = [unmerged_factors[i].n_levels for i in kept]
    strides = np.cumprod([1, *kept_shape[:-1]], dtype=np.int64)
    row_index = grid[:, kept] @ strides if kept else np.zeros(grid.shape[0], dtype=np.int64)
    return DesignMatrix(
        entries=merged_design.entries[row_index],
        column_labels=merged_design.column_labels,
        row_factors=unmerged_names,
        row_levels=grid,
    )
