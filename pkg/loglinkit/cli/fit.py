"""
`loglinkit fit` - fit a log-linear or logistic model to a table.
"""

from __future__ import annotations

import typer

from loglinkit.cli.common import DEFAULT_DATA, fail, load_table, make_config
from loglinkit.cli.output import get_output
from loglinkit.cli.serialize import dumps, fit_document, fit_table
from loglinkit.exceptions import LoglinkitError
from loglinkit.formula.parser import parse_model
from loglinkit.glm.inference import wald_intervals
from loglinkit.glm.irls import FitOptions
from loglinkit.glm.models import fit_logistic, fit_loglinear
from loglinkit.table.grouping import group_for_logistic


def fit(
    model: str = typer.Option(..., "--model", "-m", help="Model formula, e.g. AC+AD+AE+BCDEF"),
    family: str = typer.Option(
        "poisson", "--family", "-f", help="poisson (log-linear) or binomial (logistic)"
    ),
    data: str = typer.Option(
        DEFAULT_DATA, "--data", "-d", help="CSV file or bundled dataset name"
    ),
    outcome: str | None = typer.Option(None, "--outcome", "-y", help="Binary outcome factor"),
    merge: list[str] = typer.Option(
        [], "--merge", help="Factors to merge over (comma separated or repeated)"
    ),
    tol: float | None = typer.Option(None, "--tol", help="Max score residual at convergence"),
    max_iter: int | None = typer.Option(None, "--max-iter", help="IRLS iteration limit"),
    alpha: float | None = typer.Option(None, "--alpha", help="1 - Wald interval level"),
    output_format: str | None = typer.Option(
        None, "--format", help="human (tables) or structured (JSON)"
    ),
) -> None:
    """Fit a model and print estimates, standard errors and the deviance."""
    output = get_output()
    if not model.strip():
        raise typer.BadParameter("model must not be empty", param_hint="--model")
    config = make_config(
        subcommand="fit",
        data=data,
        model=model,
        family=family,
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

        if config.family == "binomial":
            assert config.outcome is not None
            grouped = group_for_logistic(table, config.outcome, config.merge)
            stage = "formula"
            formula = parse_model(model, grouped.names)
            stage = "fit"
            design, result = fit_logistic(formula, grouped, options)
        else:
            stage = "formula"
            formula = parse_model(model, table.names)
            stage = "fit"
            design, result = fit_loglinear(formula, table, options)
    except LoglinkitError as e:
        fail(stage, e, subject=model if stage in ("formula", "fit") else data)

    intervals = wald_intervals(result, settings.alpha)
    output.verbose(f"Converged in {result.iterations} iterations ({design.n_rows} rows)")
    if settings.output_format == "structured":
        command = config.model_dump(mode="json", exclude_none=True)
        command["model"] = str(formula)
        output.document(dumps(fit_document(command, result, intervals)))
    else:
        title = f"{config.family} model {formula}"
        output.render(fit_table(title, result, intervals))
