"""
`loglinkit correspond` - verify that a log-linear fit and its implied logistic fit agree.
"""

from __future__ import annotations

import typer

from loglinkit.cli.common import DEFAULT_DATA, fail, load_table, make_config
from loglinkit.cli.output import get_output
from loglinkit.cli.serialize import dumps, report_document, report_table
from loglinkit.correspondence.pair import build_pair
from loglinkit.correspondence.report import verify_correspondence
from loglinkit.exceptions import CheckFailedError, IneligibleModelError, LoglinkitError
from loglinkit.formula.logistic import is_correspondence_eligible
from loglinkit.formula.parser import parse_model
from loglinkit.glm.irls import FitOptions


def correspond(
    model: str = typer.Option(..., "--model", "-m", help="Log-linear model formula"),
    outcome: str = typer.Option(..., "--outcome", "-y", help="Binary outcome factor"),
    data: str = typer.Option(
        DEFAULT_DATA, "--data", "-d", help="CSV file or bundled dataset name"
    ),
    merge: list[str] = typer.Option(
        [], "--merge", help="Factors to merge over (comma separated or repeated)"
    ),
    tol: float | None = typer.Option(None, "--tol", help="Absolute tolerance for every check"),
    max_iter: int | None = typer.Option(None, "--max-iter", help="IRLS iteration limit"),
    alpha: float | None = typer.Option(None, "--alpha", help="1 - Wald interval level"),
    output_format: str | None = typer.Option(
        None, "--format", help="human (tables) or structured (JSON)"
    ),
) -> None:
    """Fit both models and check estimates, standard errors and deviances against each other."""
    output = get_output()
    if not model.strip():
        raise typer.BadParameter("model must not be empty", param_hint="--model")
    config = make_config(
        subcommand="correspond",
        data=data,
        model=model,
        outcome=outcome,
        merge=merge,
        tolerance=tol,
        max_iterations=max_iter,
        alpha=alpha,
        output_format=output_format,
    )

    stage = "config"
    try:
        settings = config.settings()
        options = FitOptions.from_settings(settings)

        stage = "data"
        table = load_table(data)
        table.factor(outcome)

        stage = "formula"
        formula = parse_model(model, table.names)
        eligibility = is_correspondence_eligible(formula, outcome, table.names)
        if not eligibility:
            raise IneligibleModelError(outcome, eligibility.required_term)

        stage = "fit"
        pair = build_pair(table, formula, outcome, config.merge, options)

        stage = "check"
        report = verify_correspondence(pair, settings.verify_tolerance, settings.alpha)
    except LoglinkitError as e:
        fail(stage, e, subject=model if stage != "data" else data)

    if settings.output_format == "structured":
        command = config.model_dump(mode="json", exclude_none=True)
        output.document(dumps(report_document(command, report)))
    else:
        output.render(report_table(report))

    if not report.passed:
        failed = ", ".join(report.failed)
        fail("check", CheckFailedError(f"Correspondence checks failed: {failed}", report.failed))
    output.success("All correspondence checks passed")
