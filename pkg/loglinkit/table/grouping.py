"""
Regroup a contingency table into binomial (trials, successes) form.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from loglinkit.exceptions import DataError
from loglinkit.table.contingency import ContingencyTable, FactorSpec, cell_grid
from loglinkit.utils.logging import get_logger

logger = get_logger(__name__)


def _check_outcome(table: ContingencyTable, outcome: str) -> int:
    factor = table.factor(outcome)
    if not factor.is_binary:
        raise DataError(f"Outcome '{outcome}' must be binary, it has {factor.n_levels} levels")
    return table.axis(outcome)


def _check_merge(table: ContingencyTable, outcome: str, merge: Iterable[str]) -> tuple[str, ...]:
    requested = set(merge)
    unknown = requested - set(table.names)
    if unknown:
        raise DataError("Cannot merge over unknown factors: " + ", ".join(sorted(unknown)))
    merged = tuple(name for name in table.names if name in requested)
    if outcome in merged:
        raise DataError(f"Cannot merge over the outcome '{outcome}'")
    return merged


def collapse(
    values: NDArray[np.float64] | NDArray[np.int64],
    table: ContingencyTable,
    outcome: str,
    merge: Iterable[str] = (),
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Sum per-cell values into covariate classes.

    Args:
        values: One value per cell, in canonical order or shaped like the table
        table: Table defining the cell layout
        outcome: Binary outcome factor
        merge: Factors summed over in addition to the outcome

    Returns:
        (class totals over both outcome levels, class totals at outcome level 1),
        classes enumerated with the first retained factor fastest
    """
    outcome_axis = _check_outcome(table, outcome)
    merged = _check_merge(table, outcome, merge)
    cube = np.asarray(values, dtype=np.float64).reshape(table.shape, order="F")
    merge_axes = tuple(table.axis(name) for name in merged)

    totals = cube.sum(axis=(outcome_axis, *merge_axes))
    successes = np.take(cube, 1, axis=outcome_axis)
    # axes after the outcome shift down by one once it is taken
    shifted = tuple(axis - 1 if axis > outcome_axis else axis for axis in merge_axes)
    successes = successes.sum(axis=shifted)
    return totals.ravel(order="F"), successes.ravel(order="F")


@dataclass(frozen=True, eq=False)
class GroupedBinomialData:
    """
    Binomial data: per covariate class, trials and successes.

    Classes are the cross-classifications of ``factors`` (the retained
    factors), first factor fastest.
    """

    factors: tuple[FactorSpec, ...]
    trials: NDArray[np.int64]
    successes: NDArray[np.int64]
    outcome: str
    merged: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        trials = np.asarray(self.trials, dtype=np.int64)
        successes = np.asarray(self.successes, dtype=np.int64)
        expected = int(np.prod([f.n_levels for f in self.factors], dtype=np.int64))
        if trials.shape != (expected,) or successes.shape != (expected,):
            raise DataError(
                f"Expected {expected} classes, got trials {trials.shape} "
                f"and successes {successes.shape}"
            )
        if np.any(trials < 0) or np.any(successes < 0) or np.any(successes > trials):
            raise DataError("Successes must satisfy 0 <= s <= t")
        for array in (trials, successes):
            array.setflags(write=False)
        object.__setattr__(self, "trials", trials)
        object.__setattr__(self, "successes", successes)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(factor.name for factor in self.factors)

    @property
    def n_classes(self) -> int:
        return int(self.trials.size)

    @property
    def total(self) -> int:
        return int(self.trials.sum())

    def classes(self) -> NDArray[np.int64]:
        """Cross-classifications of the retained factors, one row per class."""
        return cell_grid([factor.n_levels for factor in self.factors])

    @property
    def proportions(self) -> NDArray[np.float64]:
        """y_i = s_i / t_i; classes with t_i = 0 give 0."""
        with np.errstate(divide="ignore", invalid="ignore"):
            y = np.where(self.trials > 0, self.successes / np.maximum(self.trials, 1), 0.0)
        return y.astype(np.float64)

    @property
    def empty_classes(self) -> list[tuple[int, ...]]:
        """Classes with no observations."""
        grid = self.classes()
        return [tuple(int(j) for j in grid[i]) for i in np.flatnonzero(self.trials == 0)]

    def nonempty_mask(self) -> NDArray[np.bool_]:
        return self.trials > 0

    def merge(self, factors: Iterable[str]) -> GroupedBinomialData:
        """
        Merge further over some retained factors.

        Args:
            factors: Retained factors to sum over

        Returns:
            GroupedBinomialData over the remaining factors
        """
        to_merge = set(factors)
        unknown = to_merge - set(self.names)
        if unknown:
            raise DataError("Cannot merge over factors not retained: " + ", ".join(sorted(unknown)))
        shape = tuple(factor.n_levels for factor in self.factors)
        axes = tuple(i for i, name in enumerate(self.names) if name in to_merge)
        trials = self.trials.reshape(shape, order="F").sum(axis=axes).ravel(order="F")
        successes = self.successes.reshape(shape, order="F").sum(axis=axes).ravel(order="F")
        kept = tuple(factor for factor in self.factors if factor.name not in to_merge)
        merged = self.merged + tuple(name for name in self.names if name in to_merge)
        return GroupedBinomialData(kept, trials, successes, self.outcome, merged)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupedBinomialData):
            return NotImplemented
        return (
            self.factors == other.factors
            and self.outcome == other.outcome
            and np.array_equal(self.trials, other.trials)
            and np.array_equal(self.successes, other.successes)
        )

    __hash__ = None  # type: ignore[assignment]


def group_for_logistic(
    table: ContingencyTable, outcome: str, merge: Iterable[str] = ()
) -> GroupedBinomialData:
    """
    Group a table into binomial form with ``outcome`` as the response.

    Args:
        table: Source contingency table
        outcome: Binary outcome factor (level 1 counts as success)
        merge: Factors whose cells are summed together

    Returns:
        GroupedBinomialData with one class per cross-classification of the
        factors other than the outcome and the merged ones
    """
    merged = _check_merge(table, outcome, merge)
    totals, successes = collapse(table.flat_counts(), table, outcome, merged)
    retained = tuple(
        factor for factor in table.factors if factor.name != outcome and factor.name not in merged
    )
    data = GroupedBinomialData(
        factors=retained,
        trials=np.rint(totals).astype(np.int64),
        successes=np.rint(successes).astype(np.int64),
        outcome=outcome,
        merged=merged,
    )
    if data.empty_classes:
        logger.warning(
            "%d covariate class(es) have no observations and carry no likelihood",
            len(data.empty_classes),
        )
    return data


def margin_over_outcome(table: ContingencyTable, outcome: str) -> dict[tuple[int, ...], int]:
    """
    Per non-outcome cross-classification, the total n_0 + n_1.

    Args:
        table: Contingency table
        outcome: Binary outcome factor

    Returns:
        Mapping from class (levels of the non-outcome factors, in table order) to total
    """
    totals, _ = collapse(table.flat_counts(), table, outcome)
    shape: Sequence[int] = [f.n_levels for f in table.factors if f.name != outcome]
    grid = cell_grid(shape)
    return {tuple(int(j) for j in grid[i]): int(round(t)) for i, t in enumerate(totals)}
