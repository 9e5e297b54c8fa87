"""
Tests for the incidence matrix and the block rearrangement of X_ll.

Tests focus on:
- T for the no-three-way-interaction model and for the bundled model
- The rearranged design against its published form
- Block structure, and its failure for ineligible models
"""

import numpy as np
import pytest

from loglinkit.correspondence.pair import CorrespondencePair
from loglinkit.design.builder import (
    DesignMatrix,
    build_logistic_design,
    build_loglinear_design,
    parse_dump,
)
from loglinkit.design.incidence import IncidenceMatrix, incidence_matrix, rearrange_blocks
from loglinkit.design.labels import ParameterLabel
from loglinkit.exceptions import DesignError
from loglinkit.formula.logistic import derive_logistic_formula
from loglinkit.formula.parser import parse_model
from loglinkit.formula.terms import ModelFormula
from loglinkit.table.contingency import ContingencyTable
from loglinkit.table.grouping import group_for_logistic
from tests.fixtures import golden


def three_way_parts(
    table: ContingencyTable, formula: ModelFormula, outcome: str = "Y"
) -> tuple[DesignMatrix, DesignMatrix, IncidenceMatrix]:
    x_ll = build_loglinear_design(formula, table)
    lt_formula = derive_logistic_formula(formula, outcome)
    x_lt = build_logistic_design(lt_formula, group_for_logistic(table, outcome))
    t = incidence_matrix(formula, outcome, x_ll.column_labels, x_lt.column_labels)
    return x_ll, x_lt, t


class TestIncidenceMatrix:
    """Tests for incidence_matrix."""

    def test_three_way_golden(
        self, three_way_table: ContingencyTable, three_way_formula: ModelFormula
    ) -> None:
        _, x_lt, t = three_way_parts(three_way_table, three_way_formula)

        assert x_lt.labels == ("(Intercept)", "X[1]", "X[2]", "Z")
        assert np.array_equal(t.entries, parse_dump(golden.T_THREE_WAY))

    def test_bundled_model(self, chd_pair: CorrespondencePair) -> None:
        t = chd_pair.incidence
        selected = [t.lambda_labels[j] for j in t.columns]

        assert t.shape == (4, 36)
        assert t.entries.sum(axis=1).tolist() == [1, 1, 1, 1]
        assert t.entries.sum(axis=0).max() == 1
        assert [str(label) for label in selected] == ["A", "AC", "AD", "AE"]

    def test_apply_and_congruence(self, chd_pair: CorrespondencePair) -> None:
        t = chd_pair.incidence
        fit = chd_pair.loglinear.fit

        assert t.apply(fit.estimates).shape == (4,)
        assert t.congruence(fit.covariance).shape == (4, 4)

    def test_missing_counterpart(self) -> None:
        formula = parse_model("XY+Z", "XYZ")
        ll_labels = [ParameterLabel(), ParameterLabel(("Y",), (1,))]
        lt_labels = [ParameterLabel(), ParameterLabel(("Z",), (1,))]

        with pytest.raises(DesignError, match="no log-linear counterpart"):
            incidence_matrix(formula, "Y", ll_labels, lt_labels)

    def test_outcome_not_in_model(self) -> None:
        with pytest.raises(DesignError, match="not a factor"):
            incidence_matrix(parse_model("XZ", "XZ"), "Y", [], [])

    def test_rejects_two_ones_in_a_row(self) -> None:
        labels = (ParameterLabel(), ParameterLabel(("A",), (1,)))

        with pytest.raises(DesignError, match="one 1 per row"):
            IncidenceMatrix(np.ones((1, 2), dtype=np.int64), labels[:1], labels)


class TestRearrangeBlocks:
    """Tests for rearrange_blocks."""

    def test_three_way_golden(
        self, three_way_table: ContingencyTable, three_way_formula: ModelFormula
    ) -> None:
        x_ll, x_lt, t = three_way_parts(three_way_table, three_way_formula)
        rearranged = rearrange_blocks(x_ll, t, "Y")

        assert np.array_equal(rearranged.matrix.entries, parse_dump(golden.X_RLL_THREE_WAY))
        assert rearranged.matrix.labels == golden.RLL_LAMBDA_ORDER
        assert rearranged.row_permutation == (3, 4, 5, 9, 10, 11, 0, 1, 2, 6, 7, 8)

    def test_block_structure(
        self, three_way_table: ContingencyTable, three_way_formula: ModelFormula
    ) -> None:
        x_ll, x_lt, t = three_way_parts(three_way_table, three_way_formula)
        rearranged = rearrange_blocks(x_ll, t, "Y")

        assert np.array_equal(rearranged.upper_left, x_lt.entries)
        assert not rearranged.lower_left.any()
        assert np.array_equal(rearranged.upper_right, rearranged.lower_right)
        assert rearranged.lower_right.shape == (6, 6)
        assert np.array_equal(rearranged.incidence, np.eye(4, 10, dtype=np.int64))

    def test_bundled_model(self, chd_pair: CorrespondencePair) -> None:
        rearranged = rearrange_blocks(chd_pair.loglinear.design, chd_pair.incidence, "A")

        assert np.array_equal(rearranged.upper_left, chd_pair.logistic.design.entries)
        assert rearranged.lower_right.shape == (32, 32)

    def test_ineligible_model(self, three_way_table: ContingencyTable) -> None:
        """Without XZ the lower-right block is 6 x 4."""
        formula = parse_model("XY+YZ", three_way_table.names)
        x_ll, _, t = three_way_parts(three_way_table, formula)

        with pytest.raises(DesignError, match="full interaction of the factors other than Y"):
            rearrange_blocks(x_ll, t, "Y")

    def test_outcome_must_be_binary(
        self, three_way_table: ContingencyTable, three_way_formula: ModelFormula
    ) -> None:
        x_ll, _, t = three_way_parts(three_way_table, three_way_formula)

        with pytest.raises(DesignError, match="must be binary"):
            rearrange_blocks(x_ll, t, "X")
