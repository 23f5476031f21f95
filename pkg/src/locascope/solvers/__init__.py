"""Exact combinatorial and spectral kernels for small components."""

from .base import ComponentTooLarge, CountPolynomial, eval_log_partition, two_coloring
from .independence import independence_number, independence_polynomial, max_independent_set
from .matching import matching_number, matching_polynomial, max_matching
from .potential import InvalidPotential, PotentialSpec, sample_potential
from .properties import GraphProperty, dist_to_property
from .spectral import StepFunction, laplacian_spectrum, spectral_cdf, sup_distance

__all__ = [
    "ComponentTooLarge",
    "CountPolynomial",
    "GraphProperty",
    "InvalidPotential",
    "PotentialSpec",
    "StepFunction",
    "eval_log_partition",
    "two_coloring",
    "max_independent_set",
    "independence_number",
    "independence_polynomial",
    "max_matching",
    "matching_number",
    "matching_polynomial",
    "dist_to_property",
    "laplacian_spectrum",
    "spectral_cdf",
    "sup_distance",
    "sample_potential",
]
