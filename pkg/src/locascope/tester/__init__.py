"""Constant-query parameter tester."""

from .database import (
    DatabaseEntry,
    DatabaseFormatError,
    DuplicateLabel,
    NoMatchWithinTolerance,
    TesterDatabase,
    TestOutput,
    build_database,
    nearest_entry,
    run_tester,
)
from .sampling import CountingGraph, EmpiricalDistribution, sample_roots, sample_stats

__all__ = [
    "CountingGraph",
    "DatabaseEntry",
    "DatabaseFormatError",
    "DuplicateLabel",
    "EmpiricalDistribution",
    "NoMatchWithinTolerance",
    "TestOutput",
    "TesterDatabase",
    "build_database",
    "nearest_entry",
    "run_tester",
    "sample_roots",
    "sample_stats",
]
