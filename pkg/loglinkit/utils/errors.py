"""
Error message formatter - turns pipeline failures into readable reports.
"""

from __future__ import annotations

import traceback

from loglinkit.exceptions import (
    ChecksumError,
    ConvergenceError,
    DataError,
    FormulaError,
    IneligibleModelError,
    MLENotFoundError,
    SingularInformationError,
)


class ErrorFormatter:
    """Formats error messages for the command-line surface."""

    def format_error(
        self,
        stage: str,
        error: Exception,
        subject: str | None = None,
        original_error: Exception | None = None,
    ) -> str:
        """
        Format a detailed error message for a failed pipeline stage.

        Args:
            stage: Stage where failure occurred (data, formula, design, fit, check)
            error: The error that occurred
            subject: Optional model string or data path the stage worked on
            original_error: Optional original exception, adds a traceback excerpt

        Returns:
            Formatted error message string
        """
        header = f"Failed at stage: {stage}"
        if subject:
            header = f"{header} ({subject})"
        lines = [header, ""]

        error_msg = str(error)
        lines.append(f"Error: {error_msg}" if error_msg else f"Error: {type(error).__name__}")

        if original_error is not None:
            lines.append("")
            lines.append("Traceback (most recent call last):")
            tb_lines = traceback.format_exception(
                type(original_error),
                original_error,
                original_error.__traceback__,
                limit=3,
            )
            lines.extend(["  " + line.rstrip() for line in tb_lines[-3:]])

        suggestions = self._get_suggestions(stage, error)
        if suggestions:
            lines.append("")
            lines.append("Suggested fixes:")
            for suggestion in suggestions:
                lines.append(f"  • {suggestion}")

        return "\n".join(lines)

    def _get_suggestions(self, stage: str, error: Exception) -> list[str]:
        """Get suggested fixes based on error type and stage."""
        suggestions: list[str] = []

        if isinstance(error, DataError):
            suggestions.append("The CSV needs one column per factor plus a 'count' column")
            suggestions.append("Every combination of factor levels must appear exactly once")
        elif isinstance(error, ChecksumError):
            suggestions.append("Reinstall loglinkit to restore the bundled data file")
        elif isinstance(error, FormulaError):
            suggestions.append("Write terms as factor labels joined by '+', e.g. 'XY+XZ+YZ'")
            suggestions.append("Use '*' between factor names longer than one character")
        elif isinstance(error, IneligibleModelError):
            term = "".join(error.missing_term)
            if term:
                suggestions.append(f"Add the term '{term}' to the log-linear model")
            suggestions.append("Or choose a different outcome factor with --outcome")
        elif isinstance(error, MLENotFoundError):
            suggestions.append("Check for zero cells or empty classes in the table")
            suggestions.append("Drop the highest-order term that is fitted by zero counts")
        elif isinstance(error, ConvergenceError):
            suggestions.append("Raise max_iterations in loglinkit.toml or LOGLINKIT_MAX_ITERATIONS")
        elif isinstance(error, SingularInformationError):
            suggestions.append("The model has more parameters than the data can identify")

        if not suggestions and stage == "check":
            suggestions.append("Re-run with --debug to see the individual check residuals")

        return suggestions

    def print_error(
        self,
        stage: str,
        error: Exception,
        subject: str | None = None,
        original_error: Exception | None = None,
    ) -> None:
        """
        Format and print an error using the output system.

        Args:
            stage: Stage where failure occurred
            error: The error that occurred
            subject: Optional model string or data path
            original_error: Optional original exception
        """
        # Lazy import to avoid circular dependency
        from loglinkit.cli.output import get_output

        output = get_output()
        output.error(self.format_error(stage, error, subject, original_error))
