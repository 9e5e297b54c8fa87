"""
Tests for ContingencyTable and FactorSpec.

Tests focus on:
- Validation of factors and counts
- Flat vector conversion in both index orders
- Canonical cell enumeration (first factor fastest)
"""

import numpy as np
import pytest

from loglinkit.exceptions import DataError
from loglinkit.table.contingency import (
    ContingencyTable,
    FactorSpec,
    IndexOrder,
    cell_grid,
    from_flat_vector,
    to_flat_vector,
)


class TestFactorSpec:
    """Tests for FactorSpec."""

    def test_binary(self) -> None:
        factor = FactorSpec.binary("A")

        assert factor.levels == ("0", "1")
        assert factor.is_binary

    def test_needs_two_levels(self) -> None:
        with pytest.raises(DataError, match="at least 2 levels"):
            FactorSpec("A", ("only",))

    def test_duplicate_labels(self) -> None:
        with pytest.raises(DataError, match="duplicate"):
            FactorSpec("A", ("x", "x"))

    def test_unknown_label(self) -> None:
        with pytest.raises(DataError, match="Unknown level 'z'"):
            FactorSpec("A", ("x", "y")).index_of("z")


class TestCellGrid:
    """Tests for cell_grid."""

    def test_first_index_fastest(self) -> None:
        grid = cell_grid([3, 2])

        assert grid.tolist() == [[0, 0], [1, 0], [2, 0], [0, 1], [1, 1], [2, 1]]

    def test_no_factors_is_one_cell(self) -> None:
        assert cell_grid([]).shape == (1, 0)


class TestContingencyTable:
    """Tests for ContingencyTable."""

    def test_bundled_table(self, chd_table: ContingencyTable) -> None:
        assert chd_table.names == tuple("ABCDEF")
        assert chd_table.n_cells == 64
        assert chd_table.total == 1841

    def test_counts_are_read_only(self, chd_table: ContingencyTable) -> None:
        with pytest.raises(ValueError):
            chd_table.counts[0, 0, 0, 0, 0, 0] = 1

    def test_rejects_negative_counts(self) -> None:
        with pytest.raises(DataError, match="non-negative"):
            from_flat_vector([1, -1], [FactorSpec.binary("A")])

    def test_rejects_fractional_counts(self) -> None:
        with pytest.raises(DataError, match="whole numbers"):
            from_flat_vector([1.5, 2.0], [FactorSpec.binary("A")])

    def test_rejects_empty_table(self) -> None:
        with pytest.raises(DataError, match="at least 1"):
            from_flat_vector([0, 0], [FactorSpec.binary("A")])

    def test_rejects_length_mismatch(self) -> None:
        with pytest.raises(DataError, match="Expected 4 counts"):
            from_flat_vector([1, 2, 3], [FactorSpec.binary("A"), FactorSpec.binary("B")])

    def test_rejects_duplicate_factor_names(self) -> None:
        with pytest.raises(DataError, match="Duplicate"):
            from_flat_vector([1, 2, 3, 4], [FactorSpec.binary("A"), FactorSpec.binary("A")])

    def test_zero_cells_are_kept(self) -> None:
        table = from_flat_vector([0, 3, 0, 2], [FactorSpec.binary("A"), FactorSpec.binary("B")])

        assert table.flat_counts().tolist() == [0, 3, 0, 2]
        assert table.counts[1, 1] == 2

    def test_last_fastest_order(self) -> None:
        factors = [FactorSpec.binary("A"), FactorSpec.with_levels("B", 3)]
        first = from_flat_vector([1, 2, 3, 4, 5, 6], factors)
        last = from_flat_vector([1, 3, 5, 2, 4, 6], factors, IndexOrder.LAST_FASTEST)

        assert first == last
        assert to_flat_vector(first, IndexOrder.LAST_FASTEST) == [1, 3, 5, 2, 4, 6]

    def test_iteration_pairs_cells_with_counts(self, three_way_table: ContingencyTable) -> None:
        cells = list(three_way_table)

        assert cells[0] == ((0, 0, 0), 12)
        assert cells[1] == ((1, 0, 0), 7)
        assert cells[-1] == ((2, 1, 1), 9)

    def test_unknown_factor(self, three_way_table: ContingencyTable) -> None:
        with pytest.raises(DataError, match="Unknown factor 'W'"):
            three_way_table.axis("W")

    def test_equality_and_hash(self, three_way_table: ContingencyTable) -> None:
        copy = from_flat_vector(three_way_table.flat_counts(), three_way_table.factors)

        assert copy == three_way_table
        assert hash(copy) == hash(three_way_table)
        assert np.array_equal(copy.cells(), three_way_table.cells())
