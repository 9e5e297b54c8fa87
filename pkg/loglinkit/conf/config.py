"""
Configuration file parser for loglinkit.toml.

Uses Python 3.11+ built-in tomllib module.
"""

from __future__ import annotations

import tomllib
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from loglinkit.conf.settings import Settings
from loglinkit.exceptions import ConfigError

CONFIG_FILENAME = "loglinkit.toml"


def find_config_file(start_path: Path | None = None) -> Path | None:
    """
    Find loglinkit.toml in the given directory.

    Args:
        start_path: Directory to look in. Defaults to current directory.

    Returns:
        Path to loglinkit.toml if found, None otherwise
    """
    if start_path is None:
        start_path = Path.cwd()

    config_file = Path(start_path).resolve() / CONFIG_FILENAME

    if config_file.exists():
        return config_file

    return None


def load_config(config_path: Path | None = None) -> dict[str, Any]:
    """
    Load the [tool.loglinkit] table of a configuration file.

    Args:
        config_path: Path to loglinkit.toml. If None, looks for it in the
                     current directory; a missing file means no overrides.

    Returns:
        dict: Parsed [tool.loglinkit] section (empty when there is no file)

    Raises:
        ConfigError: If an explicit file is missing or any file is invalid
    """
    if config_path is None:
        config_path = find_config_file()
        if config_path is None:
            return {}
    elif not config_path.exists():
        raise ConfigError(f"Configuration file not found: {config_path}")

    try:
        with open(config_path, "rb") as f:
            data = tomllib.load(f)
    except Exception as e:
        raise ConfigError(f"Failed to parse configuration file {config_path}: {e}") from e

    tool_config = data.get("tool", {}).get("loglinkit", {})
    if not isinstance(tool_config, dict):
        raise ConfigError(f"[tool.loglinkit] in {config_path} must be a table")

    unknown = set(tool_config) - set(Settings.model_fields)
    if unknown:
        raise ConfigError(
            f"Unknown keys in [tool.loglinkit] of {config_path}: {', '.join(sorted(unknown))}"
        )
    return dict(tool_config)


def load_settings(config_path: Path | None = None, **overrides: Any) -> Settings:
    """
    Build Settings with precedence overrides > loglinkit.toml > environment > defaults.

    Args:
        config_path: Optional explicit loglinkit.toml
        **overrides: Values from the command line; None values are ignored

    Returns:
        Settings

    Raises:
        ConfigError: If a value fails validation
    """
    values = load_config(config_path)
    values.update({key: value for key, value in overrides.items() if value is not None})
    try:
        return Settings(**values)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in err['loc'])}: {err['msg']}" for err in e.errors()
        )
        raise ConfigError(f"Invalid settings: {problems}") from e
