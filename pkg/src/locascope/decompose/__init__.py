"""Hyperfinite decomposition and component census."""

from .census import Census, census_drift, component_census
from .hyperfinite import Component, Decomposition, folner_radius, hyperfinite_decompose

__all__ = [
    "Component",
    "Decomposition",
    "Census",
    "folner_radius",
    "hyperfinite_decompose",
    "component_census",
    "census_drift",
]
