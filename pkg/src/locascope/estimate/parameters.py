"""Which graph parameter to estimate, and how to compute it on one component."""

import math
from dataclasses import dataclass
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..graphs.base import Graph, InvalidParameter
from ..solvers.base import eval_log_partition
from ..solvers.independence import independence_number, independence_polynomial
from ..solvers.matching import matching_number, matching_polynomial
from ..solvers.potential import PotentialSpec
from ..solvers.properties import GraphProperty, dist_to_property
from ..solvers.spectral import StepFunction, laplacian_spectrum, spectral_cdf

ParameterKind = Literal[
    "independence_ratio",
    "matching_ratio",
    "log_ind_partition",
    "log_match_partition",
    "dist_to",
    "spectral_cdf",
]


class ParameterSpec(BaseModel):
    """A graph parameter together with its arguments."""

    model_config = ConfigDict(frozen=True)

    kind: ParameterKind
    lam: float | None = Field(default=None, gt=0)
    prop: GraphProperty | None = None
    potential: PotentialSpec | None = None
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_arguments(self) -> "ParameterSpec":
        if self.kind in ("log_ind_partition", "log_match_partition") and self.lam is None:
            raise ValueError(f"{self.kind} needs lambda")
        if self.kind == "dist_to" and self.prop is None:
            raise ValueError("dist_to needs a property")
        return self

    @classmethod
    def parse(cls, text: str, **extra) -> "ParameterSpec":
        """``independence_ratio``, ``log_ind_partition:2``, ``dist_to:k_colorable:3``, ..."""
        kind, _, argument = text.strip().partition(":")
        lam = extra.pop("lam", None)
        try:
            if kind in ("log_ind_partition", "log_match_partition"):
                return cls(kind=kind, lam=float(argument) if argument else lam or 1.0, **extra)
            if kind == "dist_to":
                return cls(kind=kind, prop=GraphProperty.parse(argument), **extra)
            return cls(kind=kind, **extra)
        except ValueError as e:
            raise InvalidParameter(f"Invalid parameter '{text}': {e}", {"parameter": text}) from e

    @property
    def label(self) -> str:
        if self.lam is not None:
            return f"{self.kind}:{self.lam:g}"
        if self.prop is not None:
            return f"{self.kind}:{self.prop.label}"
        return self.kind

    @property
    def is_scalar(self) -> bool:
        return self.kind != "spectral_cdf"

    @property
    def penalty(self) -> float:
        """Per-removed-edge sensitivity factor of the parameter."""
        if self.kind in ("log_ind_partition", "log_match_partition"):
            return math.log(max(1.0, self.lam or 1.0)) + 2.0
        if self.kind == "spectral_cdf":
            return 2.0
        return 1.0


@dataclass(frozen=True, slots=True)
class SolverCaps:
    """Size caps handed to the kernels; ``None`` means the configured default."""

    component_cap: int | None = None
    coloring_cap: int | None = None
    spectral_cap: int | None = None


def component_value(
    spec: ParameterSpec,
    component: Graph,
    caps: SolverCaps = SolverCaps(),
    potential: tuple[float, ...] | None = None,
) -> float | StepFunction:
    """The parameter of one component, normalized by its vertex count."""
    n = component.n
    match spec.kind:
        case "independence_ratio":
            return independence_number(component, caps.component_cap) / n
        case "matching_ratio":
            return matching_number(component) / n
        case "log_ind_partition":
            polynomial = independence_polynomial(component, caps.component_cap)
            return eval_log_partition(polynomial, spec.lam) / n
        case "log_match_partition":
            polynomial = matching_polynomial(component, caps.component_cap)
            return eval_log_partition(polynomial, spec.lam) / n
        case "dist_to":
            return dist_to_property(component, spec.prop, caps.coloring_cap)
        case "spectral_cdf":
            eigs = laplacian_spectrum(component, potential, caps.spectral_cap)
            return spectral_cdf(eigs, n)
    raise InvalidParameter(f"Unknown parameter kind {spec.kind}")
