"""
Unit tests for loglinkit.

Fast, isolated tests for individual components.
"""
