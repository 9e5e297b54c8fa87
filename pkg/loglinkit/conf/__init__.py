"""Configuration module for settings and config file parsing."""

from __future__ import annotations

import threading

from loglinkit.conf.config import find_config_file, load_config, load_settings
from loglinkit.conf.settings import Settings

# Thread-safe singleton for settings instance
_settings_lock = threading.Lock()
_settings_instance: Settings | None = None


def get_settings() -> Settings:
    """
    Get the current settings instance.

    Defaults (environment and ``loglinkit.toml`` in the working directory)
    are loaded on first use unless set_settings() was called.

    Returns:
        Settings: The current settings instance
    """
    global _settings_instance

    with _settings_lock:
        if _settings_instance is None:
            _settings_instance = load_settings()
        return _settings_instance


def set_settings(settings: Settings) -> None:
    """
    Set the global settings instance.

    Args:
        settings: The Settings instance to use globally
    """
    global _settings_instance

    with _settings_lock:
        _settings_instance = settings


def reset_settings() -> None:
    """
    Reset the global settings instance (useful for testing).
    """
    global _settings_instance

    with _settings_lock:
        _settings_instance = None


__all__ = [
    "Settings",
    "find_config_file",
    "get_settings",
    "load_config",
    "load_settings",
    "reset_settings",
    "set_settings",
]
