"""Decompose, solve every component class exactly, aggregate by census weight."""

import logging
from dataclasses import dataclass
from typing import Any

from ..config.settings import locascope_config
from ..decompose.census import Census, component_census
from ..decompose.hyperfinite import Decomposition, hyperfinite_decompose
from ..graphs.base import Graph, InvalidParameter
from ..solvers.base import ComponentTooLarge
from ..solvers.potential import sample_potential
from ..solvers.spectral import StepFunction, laplacian_spectrum, spectral_cdf
from ..utils.parallel import ordered_map
from .aggregate import aggregate
from .parameters import ParameterSpec, SolverCaps, component_value

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Estimate:
    """Estimated parameter value with its certificate.

    ``value`` holds scalar parameters, ``cdf`` the spectral distribution.
    ``error_bound = delta_used * d * penalty`` whenever the budget was met.
    """

    parameter: ParameterSpec
    value: float | None
    cdf: StepFunction | None
    error_bound: float
    census: Census
    delta_used: float
    budget_exceeded: bool
    removed_edges: int
    k_observed: int
    vertices: int

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "parameter": self.parameter.label,
            "value": self.value,
            "error_bound": self.error_bound,
            "delta_used": self.delta_used,
            "budget_exceeded": self.budget_exceeded,
            "removed_edges": self.removed_edges,
            "k_observed": self.k_observed,
            "vertices": self.vertices,
            "census": self.census.to_dict(),
        }
        if self.cdf is not None:
            payload["cdf"] = self.cdf.to_dict()
        return payload


class EstimationWorkflow:
    """Reusable decompose-solve-aggregate pipeline for one ``(delta, r_cap)``."""

    def __init__(
        self,
        delta: float,
        r_cap: int | None = None,
        caps: SolverCaps | None = None,
        threads: int | None = None,
    ):
        self.delta = delta
        self.r_cap = locascope_config.r_cap if r_cap is None else r_cap
        self.caps = caps or SolverCaps()
        self.threads = threads

    def decompose(self, graph: Graph) -> tuple[Decomposition, Census]:
        decomposition = hyperfinite_decompose(graph, self.delta, self.r_cap)
        return decomposition, component_census(decomposition, self.threads)

    def _per_class(self, spec: ParameterSpec, census: Census) -> float | StepFunction:
        classes = census.classes()

        def solve(code):
            representative = census.representatives[code]
            logger.debug(f"Solving {spec.label} on a {representative.n}-vertex class")
            return component_value(spec, representative, self.caps)

        values = ordered_map(solve, classes, self.threads)
        weights = [float(census.fraction(code)) for code in classes]
        return aggregate(list(zip(weights, values, strict=True)))

    def _with_potential(self, spec: ParameterSpec, graph: Graph, decomposition: Decomposition) -> StepFunction:
        """Per-component spectra under one potential draw over the whole graph.

        Mixing component CDFs with weights ``|C| / |V|`` is the CDF of the
        pooled eigenvalues, which is how it is computed.
        """
        assert spec.potential is not None
        omega = sample_potential(spec.potential, graph.n, spec.seed)

        def solve(component):
            local = tuple(omega[v] for v in component.vertices)
            return laplacian_spectrum(component.graph, local, self.caps.spectral_cap)

        spectra = ordered_map(solve, decomposition.components, self.threads)
        pooled = [x for eigs in spectra for x in eigs]
        return spectral_cdf(pooled, graph.n)

    def run(self, graph: Graph, spec: ParameterSpec) -> Estimate:
        if graph.n == 0:
            raise InvalidParameter("Cannot estimate a parameter of the empty graph", {"vertices": 0})
        decomposition, census = self.decompose(graph)
        try:
            if spec.kind == "spectral_cdf" and spec.potential is not None:
                result: float | StepFunction = self._with_potential(spec, graph, decomposition)
            else:
                result = self._per_class(spec, census)
        except ComponentTooLarge as e:
            logger.error(
                f"{spec.label}: component of {e.size} vertices exceeds cap {e.cap} "
                f"(delta={self.delta}, K={decomposition.k_observed})"
            )
            raise

        error_bound = self.delta * graph.degree_bound * spec.penalty
        estimate = Estimate(
            parameter=spec,
            value=None if isinstance(result, StepFunction) else result,
            cdf=result if isinstance(result, StepFunction) else None,
            error_bound=error_bound,
            census=census,
            delta_used=self.delta,
            budget_exceeded=decomposition.budget_exceeded,
            removed_edges=len(decomposition.removed_edges),
            k_observed=decomposition.k_observed,
            vertices=graph.n,
        )
        logger.info(
            f"{spec.label} on {graph.n} vertices: "
            f"{estimate.value if estimate.value is not None else 'cdf'} ± {error_bound:g}"
        )
        return estimate


def estimate_parameter(
    graph: Graph,
    delta: float,
    r_cap: int | None,
    spec: ParameterSpec,
    caps: SolverCaps | None = None,
) -> Estimate:
    """One-shot :class:`EstimationWorkflow` run."""
    return EstimationWorkflow(delta, r_cap, caps).run(graph, spec)
