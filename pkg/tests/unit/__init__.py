"""Unit tests for locascope modules."""
