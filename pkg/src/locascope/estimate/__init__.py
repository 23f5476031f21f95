"""Decompose-solve-aggregate estimation of graph parameters."""

from .aggregate import WeightsNotNormalized, aggregate
from .baker import ApproxIndependentSet, approx_max_independent_set
from .ids import ConvergenceReport, ConvergenceRow, ids_experiment
from .parameters import ParameterSpec, SolverCaps, component_value
from .pipeline import Estimate, EstimationWorkflow, estimate_parameter

__all__ = [
    "ApproxIndependentSet",
    "ConvergenceReport",
    "ConvergenceRow",
    "Estimate",
    "EstimationWorkflow",
    "ParameterSpec",
    "SolverCaps",
    "WeightsNotNormalized",
    "aggregate",
    "approx_max_independent_set",
    "component_value",
    "estimate_parameter",
    "ids_experiment",
]
