"""
Tests for ErrorFormatter.
"""

from loglinkit.exceptions import (
    ConvergenceError,
    DataError,
    FormulaError,
    IneligibleModelError,
    MLENotFoundError,
)
from loglinkit.utils.errors import ErrorFormatter


class TestErrorFormatter:
    """Tests for ErrorFormatter.format_error."""

    def test_header_and_message(self) -> None:
        text = ErrorFormatter().format_error("data", DataError("bad row", "t.csv"), "t.csv")

        assert text.startswith("Failed at stage: data (t.csv)")
        assert "Error: t.csv: bad row" in text
        assert "'count' column" in text

    def test_formula_position(self) -> None:
        error = FormulaError("Unknown factor 'G'", spec="AG", position=0)

        assert "at position 0 in 'AG'" in ErrorFormatter().format_error("formula", error)

    def test_ineligible_suggests_missing_term(self) -> None:
        text = ErrorFormatter().format_error("formula", IneligibleModelError("Y", ("X", "Z")))

        assert "Add the term 'XZ'" in text
        assert "--outcome" in text

    def test_divergence_suggestion(self) -> None:
        text = ErrorFormatter().format_error("fit", MLENotFoundError(12, 31.2, 30.0))

        assert "zero cells" in text

    def test_convergence_suggestion(self) -> None:
        text = ErrorFormatter().format_error("fit", ConvergenceError(100, 1e-3, 12.5))

        assert "LOGLINKIT_MAX_ITERATIONS" in text

    def test_check_stage_fallback(self) -> None:
        text = ErrorFormatter().format_error("check", RuntimeError("mismatch"))

        assert "--debug" in text

    def test_traceback_excerpt(self) -> None:
        try:
            raise ValueError("inner")
        except ValueError as e:
            original = e

        text = ErrorFormatter().format_error("fit", RuntimeError("outer"), original_error=original)

        assert "Traceback (most recent call last):" in text
        assert "ValueError: inner" in text

    def test_empty_message_uses_type(self) -> None:
        assert "Error: RuntimeError" in ErrorFormatter().format_error("fit", RuntimeError())
