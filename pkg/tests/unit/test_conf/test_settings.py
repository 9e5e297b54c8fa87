"""
Tests for Settings and the loglinkit.toml loader.

Tests focus on:
- Defaults and validation
- Precedence: overrides, loglinkit.toml, environment
- Config file errors
"""

from pathlib import Path

import pytest

from loglinkit.conf import get_settings, reset_settings, set_settings
from loglinkit.conf.config import find_config_file, load_config, load_settings
from loglinkit.conf.settings import Settings
from loglinkit.exceptions import ConfigError


class TestSettings:
    """Tests for Settings."""

    def test_defaults(self) -> None:
        settings = Settings()

        assert settings.score_tolerance == 1e-10
        assert settings.max_iterations == 100
        assert settings.verify_tolerance == 1e-8
        assert settings.alpha == 0.05
        assert settings.output_format == "human"

    def test_environment(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("LOGLINKIT_MAX_ITERATIONS", "250")

        assert Settings().max_iterations == 250

    def test_dotenv(self, isolated_environment: Path) -> None:
        (isolated_environment / ".env").write_text("LOGLINKIT_ALPHA=0.1\n")

        assert Settings().alpha == 0.1

    @pytest.mark.parametrize(
        ("field", "value"),
        [("score_tolerance", 0.0), ("max_iterations", 0), ("alpha", 1.0), ("alpha", 0.0)],
    )
    def test_invalid(self, field: str, value: float) -> None:
        with pytest.raises(ValueError):
            Settings(**{field: value})


class TestConfigFile:
    """Tests for find_config_file and load_config."""

    def test_no_file(self) -> None:
        assert find_config_file() is None
        assert load_config() == {}

    def test_reads_tool_table(self, isolated_environment: Path) -> None:
        (isolated_environment / "loglinkit.toml").write_text(
            "[tool.loglinkit]\nmax_iterations = 50\nalpha = 0.01\n"
        )

        assert load_config() == {"max_iterations": 50, "alpha": 0.01}

    def test_explicit_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(ConfigError, match="not found"):
            load_config(tmp_path / "other.toml")

    def test_invalid_toml(self, isolated_environment: Path) -> None:
        (isolated_environment / "loglinkit.toml").write_text("[tool.loglinkit\n")

        with pytest.raises(ConfigError, match="Failed to parse"):
            load_config()

    def test_unknown_key(self, isolated_environment: Path) -> None:
        (isolated_environment / "loglinkit.toml").write_text("[tool.loglinkit]\nspeed = 3\n")

        with pytest.raises(ConfigError, match="Unknown keys.*speed"):
            load_config()


class TestLoadSettings:
    """Tests for load_settings precedence."""

    def test_file_beats_environment(
        self, isolated_environment: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv("LOGLINKIT_MAX_ITERATIONS", "250")
        (isolated_environment / "loglinkit.toml").write_text(
            "[tool.loglinkit]\nmax_iterations = 50\n"
        )

        assert load_settings().max_iterations == 50

    def test_overrides_beat_file(self, isolated_environment: Path) -> None:
        (isolated_environment / "loglinkit.toml").write_text(
            "[tool.loglinkit]\nmax_iterations = 50\n"
        )

        assert load_settings(max_iterations=5, alpha=None).max_iterations == 5

    def test_invalid_value(self) -> None:
        with pytest.raises(ConfigError, match="max_iterations"):
            load_settings(max_iterations=0)


class TestGlobalSettings:
    """Tests for the settings singleton."""

    def test_set_and_reset(self) -> None:
        custom = Settings(alpha=0.2)
        set_settings(custom)

        assert get_settings() is custom

        reset_settings()
        assert get_settings().alpha == 0.05

    def test_loaded_once(self) -> None:
        assert get_settings() is get_settings()
