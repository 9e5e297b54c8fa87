"""
Logging setup for the loglinkit CLI.

Library modules only call :func:`get_logger`; handlers are installed once,
by the CLI callback, on the root logger and always write to stderr so the
structured document on stdout stays parseable.
"""

from __future__ import annotations

import logging
import sys

from loglinkit.cli.output import OutputLevel

DEBUG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s"
PLAIN_FORMAT = "%(levelname)s: %(message)s"

# numerical dependencies that would otherwise inherit DEBUG from the root logger
NUMERIC_LOGGERS = ("numpy", "scipy", "pandas")

_OUTPUT_LEVELS = {
    OutputLevel.QUIET: logging.CRITICAL,
    OutputLevel.NORMAL: logging.WARNING,
    OutputLevel.VERBOSE: logging.INFO,
    OutputLevel.DEBUG: logging.DEBUG,
}


def _effective_level(level: str, quiet: bool, verbose: bool, debug: bool) -> int:
    if quiet:
        return logging.CRITICAL
    if debug:
        return logging.DEBUG
    if verbose:
        return logging.INFO
    resolved = logging.getLevelName(level.upper())
    return resolved if isinstance(resolved, int) else logging.WARNING


def setup_logging(
    level: str = "WARNING",
    quiet: bool = False,
    verbose: bool = False,
    debug: bool = False,
) -> None:
    """
    Install a single stderr handler on the root logger.

    Args:
        level: Level name used when no flag is set
        quiet: Only critical messages
        verbose: Fit convergence and check summaries (INFO)
        debug: Per-iteration IRLS diagnostics with source locations
    """
    log_level = _effective_level(level, quiet, verbose, debug)

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(log_level)
    handler.setFormatter(
        logging.Formatter(DEBUG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")
        if debug
        else logging.Formatter(PLAIN_FORMAT)
    )

    root = logging.getLogger()
    root.handlers.clear()
    root.addHandler(handler)
    root.setLevel(log_level)

    for name in NUMERIC_LOGGERS:
        logging.getLogger(name).setLevel(max(log_level, logging.WARNING))


def setup_logging_from_output_level(output_level: OutputLevel) -> None:
    """Map the CLI verbosity onto :func:`setup_logging`."""
    log_level = _OUTPUT_LEVELS.get(output_level, logging.WARNING)
    setup_logging(
        level=logging.getLevelName(log_level),
        quiet=output_level == OutputLevel.QUIET,
        debug=output_level == OutputLevel.DEBUG,
    )


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
