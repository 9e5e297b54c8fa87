"""Command-line interface for loglinkit."""

from __future__ import annotations
