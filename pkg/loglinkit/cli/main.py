"""
Main CLI entry point for loglinkit.
"""

from __future__ import annotations

import typer

from loglinkit import __version__
from loglinkit.cli import correspond, fit, reproduce
from loglinkit.cli.output import Output, OutputLevel, set_output
from loglinkit.utils.logging import setup_logging_from_output_level

app = typer.Typer(
    name="loglinkit",
    help="loglinkit - log-linear and logistic models for contingency tables",
    no_args_is_help=True,
)


def _version_callback(value: bool) -> None:
    if value:
        print(f"loglinkit {__version__}")
        raise typer.Exit()


@app.callback()
def main_callback(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Report fits and checks"),
    debug: bool = typer.Option(False, "--debug", help="Trace every IRLS iteration"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Only print results and errors"),
    version: bool = typer.Option(
        None,
        "--version",
        "-V",
        help="Show loglinkit version",
        is_eager=True,
        callback=_version_callback,
    ),
) -> None:
    level = OutputLevel.from_flags(quiet=quiet, debug=debug, verbose=verbose)
    set_output(Output(level=level))
    setup_logging_from_output_level(level)


app.command(name="fit")(fit.fit)
app.command(name="correspond")(correspond.correspond)
app.command(name="reproduce")(reproduce.reproduce)


def main() -> None:
    """Console script; commands exit with the code of the loglinkit error they hit."""
    app()


if __name__ == "__main__":
    main()
