"""
Pytest configuration and fixtures for loglinkit tests.
"""

from __future__ import annotations

import logging
import os
from collections.abc import Generator
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from loglinkit.cli.output import Output, set_output
from loglinkit.conf import reset_settings
from loglinkit.correspondence.pair import CorrespondencePair, build_pair
from loglinkit.data import reference
from loglinkit.data.registry import get_registry
from loglinkit.formula.parser import parse_model
from loglinkit.formula.terms import ModelFormula
from loglinkit.glm.irls import FitOptions
from loglinkit.table.contingency import ContingencyTable, FactorSpec, from_flat_vector

# Property tests run under the autouse isolation fixture, which they never mutate.
settings.register_profile(
    "loglinkit", suppress_health_check=[HealthCheck.function_scoped_fixture], deadline=None
)
settings.load_profile("loglinkit")


@pytest.fixture(autouse=True)
def isolated_environment(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> Generator[Path, None, None]:
    """
    Run every test in an empty directory with default settings.

    No loglinkit.toml, .env or LOGLINKIT_* variable leaks in from the host.
    """
    for name in list(os.environ):
        if name.startswith("LOGLINKIT_"):
            monkeypatch.delenv(name)
    monkeypatch.chdir(tmp_path)
    reset_settings()
    set_output(Output())
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield tmp_path
    root.handlers[:] = handlers
    root.setLevel(level)
    reset_settings()


@pytest.fixture
def options() -> FitOptions:
    """Default IRLS options, independent of the global settings."""
    return FitOptions()


@pytest.fixture(scope="session")
def chd_table() -> ContingencyTable:
    """The bundled 2^6 coronary heart disease table."""
    return get_registry().load("edwards_havranek_m2")


@pytest.fixture(scope="session")
def chd_formula(chd_table: ContingencyTable) -> ModelFormula:
    return parse_model(reference.LOGLINEAR_MODEL, chd_table.names)


@pytest.fixture(scope="session")
def chd_pair(chd_table: ContingencyTable, chd_formula: ModelFormula) -> CorrespondencePair:
    """Log-linear AC+AD+AE+BCDEF and logistic C+D+E on the 32 unmerged classes."""
    return build_pair(chd_table, chd_formula, reference.OUTCOME, (), FitOptions())


@pytest.fixture(scope="session")
def chd_merged_pair(chd_table: ContingencyTable, chd_formula: ModelFormula) -> CorrespondencePair:
    """Same models with the logistic data merged over B and F."""
    return build_pair(
        chd_table, chd_formula, reference.OUTCOME, reference.MERGED_FACTORS, FitOptions()
    )


@pytest.fixture
def three_way_table() -> ContingencyTable:
    """A 3x2x2 table over (X, Y, Z) with X at three levels."""
    factors = [FactorSpec.with_levels("X", 3), FactorSpec.binary("Y"), FactorSpec.binary("Z")]
    return from_flat_vector([12, 7, 9, 15, 11, 6, 8, 14, 10, 5, 13, 9], factors)


@pytest.fixture
def three_way_formula(three_way_table: ContingencyTable) -> ModelFormula:
    """XY+XZ+YZ: the no-three-way-interaction model."""
    return parse_model("XY+XZ+YZ", three_way_table.names)
