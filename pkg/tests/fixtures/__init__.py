"""Test data factories and reference oracles."""
