"""
P-way contingency tables with explicit zero cells.

Cells are enumerated with the first declared factor varying fastest,
which is the order of every flat count vector and design-matrix row.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike, NDArray

from loglinkit.exceptions import DataError


class IndexOrder(Enum):
    """Which factor index varies fastest in a flat count vector."""

    FIRST_FASTEST = "F"
    LAST_FASTEST = "C"


@dataclass(frozen=True)
class FactorSpec:
    """A categorical factor; level 0 is the corner-point reference level."""

    name: str
    levels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.name:
            raise DataError("Factor name must be non-empty")
        if len(self.levels) < 2:
            raise DataError(f"Factor '{self.name}' needs at least 2 levels, got {len(self.levels)}")
        if len(set(self.levels)) != len(self.levels):
            raise DataError(f"Factor '{self.name}' has duplicate level labels")

    @classmethod
    def binary(cls, name: str) -> FactorSpec:
        """A two-level factor labelled "0" and "1"."""
        return cls(name, ("0", "1"))

    @classmethod
    def with_levels(cls, name: str, n_levels: int) -> FactorSpec:
        """A factor with levels labelled "0" … "n_levels - 1"."""
        return cls(name, tuple(str(level) for level in range(n_levels)))

    @property
    def n_levels(self) -> int:
        return len(self.levels)

    @property
    def is_binary(self) -> bool:
        return self.n_levels == 2

    def index_of(self, label: str) -> int:
        """Level index of a label."""
        try:
            return self.levels.index(label)
        except ValueError:
            raise DataError(
                f"Unknown level '{label}' for factor '{self.name}' "
                f"(expected one of {', '.join(self.levels)})"
            ) from None


def cell_grid(shape: Sequence[int]) -> NDArray[np.int64]:
    """
    All cross-classifications of a table shape, first index fastest.

    Returns:
        Integer array of shape (prod(shape), len(shape))
    """
    if not shape:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*[np.arange(n) for n in shape], indexing="ij")
    return np.stack([g.ravel(order="F") for g in grids], axis=1).astype(np.int64)


@dataclass(frozen=True, eq=False)
class ContingencyTable:
    """Counts for every cross-classification of the factors."""

    factors: tuple[FactorSpec, ...]
    counts: NDArray[np.int64]

    def __post_init__(self) -> None:
        names = [factor.name for factor in self.factors]
        if len(set(names)) != len(names):
            raise DataError(f"Duplicate factor names: {names}")
        counts = np.asarray(self.counts)
        if counts.shape != self.shape:
            raise DataError(f"Counts have shape {counts.shape}, expected {self.shape}")
        if counts.size and not np.issubdtype(counts.dtype, np.integer):
            if not np.all(np.isfinite(counts)) or np.any(counts != np.round(counts)):
                raise DataError("Counts must be whole numbers")
        if np.any(counts < 0):
            raise DataError("Counts must be non-negative")
        if counts.sum() < 1:
            raise DataError("Table total must be at least 1")
        frozen = counts.astype(np.int64, copy=True)
        frozen.setflags(write=False)
        object.__setattr__(self, "counts", frozen)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(factor.n_levels for factor in self.factors)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(factor.name for factor in self.factors)

    @property
    def n_cells(self) -> int:
        return int(np.prod(self.shape, dtype=np.int64))

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def factor(self, name: str) -> FactorSpec:
        """Look up a factor by name."""
        for factor in self.factors:
            if factor.name == name:
                return factor
        raise DataError(f"Unknown factor '{name}' (table has {', '.join(self.names)})")

    def axis(self, name: str) -> int:
        """Axis of the counts array that belongs to ``name``."""
        self.factor(name)
        return self.names.index(name)

    def cells(self) -> NDArray[np.int64]:
        """Cross-classifications in canonical order (first factor fastest)."""
        return cell_grid(self.shape)

    def flat_counts(self) -> NDArray[np.int64]:
        """Counts in canonical order."""
        return self.counts.ravel(order="F")

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], int]]:
        for cell, count in zip(self.cells(), self.flat_counts()):
            yield tuple(int(j) for j in cell), int(count)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ContingencyTable):
            return NotImplemented
        return self.factors == other.factors and np.array_equal(self.counts, other.counts)

    def __hash__(self) -> int:
        return hash((self.factors, self.counts.tobytes()))


def from_flat_vector(
    counts: ArrayLike,
    factors: Sequence[FactorSpec],
    order: IndexOrder = IndexOrder.FIRST_FASTEST,
) -> ContingencyTable:
    """
    Build a table from a flat count vector.

    Args:
        counts: Non-negative integer counts, one per cell
        factors: Factor specifications
        order: Which factor index varies fastest in ``counts``

    Returns:
        ContingencyTable

    Raises:
        DataError: On a length mismatch or invalid counts
    """
    values = np.asarray(counts)
    factors = tuple(factors)
    shape = tuple(factor.n_levels for factor in factors)
    expected = int(np.prod(shape, dtype=np.int64))
    if values.ndim != 1 or values.size != expected:
        raise DataError(f"Expected {expected} counts for shape {shape}, got {values.size}")
    return ContingencyTable(factors=factors, counts=values.reshape(shape, order=order.value))


def to_flat_vector(
    table: ContingencyTable, order: IndexOrder = IndexOrder.FIRST_FASTEST
) -> list[int]:
    """Flatten a table's counts in the requested order."""
    return [int(n) for n in table.counts.ravel(order=order.value)]
