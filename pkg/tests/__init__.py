"""Tests for locascope."""
