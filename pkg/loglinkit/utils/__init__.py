"""Utility modules for error handling and logging."""

from __future__ import annotations
