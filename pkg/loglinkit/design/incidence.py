"""
The incidence matrix T (beta = T lambda) and the rearranged block design.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from loglinkit.design.builder import DEFAULT_RANK_TOLERANCE, DesignMatrix, matrix_rank
from loglinkit.design.labels import ParameterLabel
from loglinkit.exceptions import DesignError
from loglinkit.formula.terms import ModelFormula


@dataclass(frozen=True, eq=False)
class IncidenceMatrix:
    """0/1 matrix with one unit entry per row: row k selects the lambda of beta k."""

    entries: NDArray[np.int64]
    beta_labels: tuple[ParameterLabel, ...]
    lambda_labels: tuple[ParameterLabel, ...]

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=np.int64)
        if entries.shape != (len(self.beta_labels), len(self.lambda_labels)):
            raise DesignError(f"Incidence matrix shape {entries.shape} does not match its labels")
        if np.any(entries.sum(axis=1) != 1) or np.any(entries.sum(axis=0) > 1):
            raise DesignError("Incidence matrix needs one 1 per row and at most one per column")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape  # type: ignore[return-value]

    @property
    def columns(self) -> tuple[int, ...]:
        """Selected lambda column for each beta row."""
        return tuple(int(j) for j in np.argmax(self.entries, axis=1))

    def apply(self, vector: ArrayLike) -> NDArray[np.float64]:
        """T @ vector."""
        return self.entries @ np.asarray(vector, dtype=np.float64)

    def congruence(self, matrix: ArrayLike) -> NDArray[np.float64]:
        """T @ matrix @ T.T."""
        return self.entries @ np.asarray(matrix, dtype=np.float64) @ self.entries.T


def incidence_matrix(
    ll: ModelFormula,
    outcome: str,
    ll_labels: Sequence[ParameterLabel],
    lt_labels: Sequence[ParameterLabel],
) -> IncidenceMatrix:
    """
    Map logistic parameters onto the log-linear parameters that define them.

    The beta for (term, levels) is the lambda for the term with the outcome
    added at level 1; the logistic intercept is the outcome main effect.

    Args:
        ll: Log-linear formula
        outcome: Outcome factor
        ll_labels: Column labels of the log-linear design
        lt_labels: Column labels of the derived logistic design

    Returns:
        IncidenceMatrix of shape (len(lt_labels), len(ll_labels))

    Raises:
        DesignError: If a logistic parameter has no log-linear counterpart
    """
    if outcome not in ll.factors:
        raise DesignError(f"Outcome '{outcome}' is not a factor of the log-linear model")
    position = {label.key: index for index, label in enumerate(ll_labels)}
    entries = np.zeros((len(lt_labels), len(ll_labels)), dtype=np.int64)
    for row, label in enumerate(lt_labels):
        wanted = label.key | {(outcome, 1)}
        if wanted not in position:
            raise DesignError(
                f"Logistic parameter {label} has no log-linear counterpart "
                f"with {outcome} at level 1"
            )
        entries[row, position[wanted]] = 1
    return IncidenceMatrix(entries, tuple(lt_labels), tuple(ll_labels))


@dataclass(frozen=True, eq=False)
class RearrangedDesign:
    """
    X_ll with outcome-bearing columns first and outcome-level-1 rows first.

    Block form::

        [ X_lt*   X_ll-lt ]
        [   0     X_ll-lt ]
    """

    matrix: DesignMatrix
    row_permutation: tuple[int, ...]
    column_permutation: tuple[int, ...]
    n_beta: int

    @property
    def half(self) -> int:
        return self.matrix.n_rows // 2

    @property
    def upper_left(self) -> NDArray[np.float64]:
        return self.matrix.entries[: self.half, : self.n_beta]

    @property
    def upper_right(self) -> NDArray[np.float64]:
        return self.matrix.entries[: self.half, self.n_beta :]

    @property
    def lower_left(self) -> NDArray[np.float64]:
        return self.matrix.entries[self.half :, : self.n_beta]

    @property
    def lower_right(self) -> NDArray[np.float64]:
        return self.matrix.entries[self.half :, self.n_beta :]

    @property
    def incidence(self) -> NDArray[np.int64]:
        """T_r = [I 0] in the rearranged parameter order."""
        n_lambda = self.matrix.n_columns
        return np.eye(self.n_beta, n_lambda, dtype=np.int64)


def rearrange_blocks(
    x_ll: DesignMatrix,
    incidence: IncidenceMatrix,
    outcome: str,
    rank_tolerance: float = DEFAULT_RANK_TOLERANCE,
) -> RearrangedDesign:
    """
    Permute X_ll into the block form used by the correspondence proofs.

    Columns selected by T come first in beta order, followed by the rest in
    their original order. Rows at outcome level 1 come first, then level 0,
    each in their original order.

    Args:
        x_ll: Log-linear design
        incidence: Incidence matrix built from ``x_ll``'s labels
        outcome: Binary outcome factor
        rank_tolerance: Relative pivot threshold for the X_ll-lt invertibility check

    Returns:
        RearrangedDesign

    Raises:
        DesignError: If the block structure does not hold, which happens when the
            log-linear model lacks the full interaction of the other factors
    """
    if outcome not in x_ll.row_factors:
        raise DesignError(f"Outcome '{outcome}' does not index the design rows")
    if incidence.shape[1] != x_ll.n_columns:
        raise DesignError("Incidence matrix and design disagree on the number of parameters")
    outcome_levels = x_ll.row_levels[:, x_ll.row_factors.index(outcome)]
    if outcome_levels.max() > 1:
        raise DesignError(f"Outcome '{outcome}' must be binary")

    selected = incidence.columns
    chosen = set(selected)
    columns = (*selected, *(j for j in range(x_ll.n_columns) if j not in chosen))
    rows = (
        *(int(i) for i in np.flatnonzero(outcome_levels == 1)),
        *(int(i) for i in np.flatnonzero(outcome_levels == 0)),
    )
    rearranged = RearrangedDesign(
        matrix=x_ll.select(rows, columns),
        row_permutation=rows,
        column_permutation=columns,
        n_beta=incidence.shape[0],
    )

    if np.any(rearranged.lower_left != 0):
        raise DesignError("Lower-left block is not zero: T does not select outcome terms")
    if not np.array_equal(rearranged.upper_right, rearranged.lower_right):
        raise DesignError("Right-hand blocks differ between outcome levels")
    square = rearranged.lower_right
    if square.shape[0] != square.shape[1]:
        raise DesignError(
            f"X_ll-lt is {square.shape[0]}x{square.shape[1]}, not square: the model "
            f"does not contain the full interaction of the factors other than {outcome}"
        )
    if matrix_rank(square, rank_tolerance) < square.shape[0]:
        raise DesignError("X_ll-lt is singular")
    return rearranged
