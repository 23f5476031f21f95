"""Integration tests across decomposition, solvers and estimation."""
