"""
Tests for loglinkit.
"""
