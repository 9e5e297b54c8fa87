"""
Output utilities for CLI commands.

Diagnostics go to standard error through a rich console; the result
document (structured JSON or rendered tables) goes to standard output.
"""

from __future__ import annotations

import sys
from enum import Enum
from typing import Any

from rich.console import Console


class OutputLevel(Enum):
    """Output verbosity levels."""

    QUIET = 0
    NORMAL = 1
    VERBOSE = 2
    DEBUG = 3

    @classmethod
    def from_flags(cls, quiet: bool, debug: bool, verbose: bool) -> OutputLevel:
        """Quiet wins over debug, debug over verbose."""
        if quiet:
            return cls.QUIET
        if debug:
            return cls.DEBUG
        if verbose:
            return cls.VERBOSE
        return cls.NORMAL


class Output:
    """Output handler with verbosity control and colored diagnostics."""

    def __init__(self, level: OutputLevel = OutputLevel.NORMAL):
        """
        Initialize output handler.

        Args:
            level: Output verbosity level
        """
        self.level = level
        self.console = Console(stderr=True, highlight=False)
        self.stdout = Console(highlight=False, soft_wrap=True)

    def _print(self, message: str, style: str | None = None) -> None:
        """Internal print method (standard error)."""
        if style:
            self.console.print(message, style=style)
        else:
            self.console.print(message)

    def info(self, message: str) -> None:
        """Print info message."""
        if self.level.value >= OutputLevel.NORMAL.value:
            self._print(f"[blue]ℹ[/blue]  {message}")

    def success(self, message: str) -> None:
        """Print success message."""
        if self.level.value >= OutputLevel.NORMAL.value:
            self._print(f"[green]✓[/green]  {message}")

    def error(self, message: str) -> None:
        """Print error message (shown even in quiet mode)."""
        self._print(f"[red]✗[/red]  {message}")

    def warning(self, message: str) -> None:
        """Print warning message."""
        if self.level.value >= OutputLevel.NORMAL.value:
            self._print(f"[yellow]⚠[/yellow]  {message}")

    def debug(self, message: str) -> None:
        """Print debug message."""
        if self.level.value >= OutputLevel.DEBUG.value:
            self._print(f"[dim]DEBUG:[/dim] {message}")

    def verbose(self, message: str) -> None:
        """Print verbose message."""
        if self.level.value >= OutputLevel.VERBOSE.value:
            self._print(message)

    def document(self, text: str) -> None:
        """Write a structured document verbatim to standard output."""
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        sys.stdout.flush()

    def render(self, renderable: Any) -> None:
        """Render a rich object (tables) to standard output."""
        self.stdout.print(renderable)


# Global output instance (will be set by CLI)
_output: Output | None = None


def get_output() -> Output:
    """Get the global output instance."""
    global _output
    if _output is None:
        _output = Output()
    return _output


def set_output(output: Output) -> None:
    """Set the global output instance."""
    global _output
    _output = output
