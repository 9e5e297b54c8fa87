"""
Integration tests for loglinkit.

End-to-end tests for complete workflows.
"""
