"""Laplacian and Schrödinger spectra and normalized spectral distributions."""

import bisect
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..config.settings import locascope_config
from ..graphs.base import Graph, InvalidParameter
from .base import require_size

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class StepFunction:
    """Nondecreasing right-continuous step function.

    ``values[i]`` is the value on ``[jumps[i], jumps[i + 1])``; the value left
    of ``jumps[0]`` is 0. ``n`` is the eigenvalue count behind a spectral
    distribution, or ``None`` for mixtures.
    """

    jumps: tuple[float, ...]
    values: tuple[float, ...]
    n: int | None = None

    def __call__(self, lam: float) -> float:
        index = bisect.bisect_right(self.jumps, lam)
        return self.values[index - 1] if index else 0.0

    def left_limit(self, lam: float) -> float:
        index = bisect.bisect_left(self.jumps, lam)
        return self.values[index - 1] if index else 0.0

    def shift(self, offset: float) -> "StepFunction":
        return StepFunction(tuple(x + offset for x in self.jumps), self.values, self.n)

    @classmethod
    def mixture(cls, parts: Sequence[tuple[float, "StepFunction"]]) -> "StepFunction":
        """Pointwise ``Σ w_i F_i``."""
        jumps = sorted({x for _, part in parts for x in part.jumps})
        values = tuple(
            math.fsum(weight * part(x) for weight, part in parts) for x in jumps
        )
        return cls(tuple(jumps), values, None)

    def to_rows(self) -> list[tuple[float, float]]:
        return list(zip(self.jumps, self.values, strict=True))

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "jumps": list(self.jumps), "values": list(self.values)}


def _merge_clusters(eigs: np.ndarray, tol: float) -> list[float]:
    """Replace runs of eigenvalues closer than ``tol`` by their mean."""
    merged: list[float] = []
    start = 0
    for i in range(1, len(eigs) + 1):
        if i == len(eigs) or eigs[i] - eigs[i - 1] > tol:
            mean = float(np.mean(eigs[start:i]))
            merged.extend([mean] * (i - start))
            start = i
    return merged


def laplacian_matrix(graph: Graph, potential: Sequence[float] | None = None) -> np.ndarray:
    matrix = np.zeros((graph.n, graph.n))
    for v, nbrs in enumerate(graph.adjacency):
        matrix[v, v] = len(nbrs)
        for u in nbrs:
            matrix[v, u] = -1.0
    if potential is not None:
        matrix[np.diag_indices(graph.n)] += np.asarray(potential, dtype=float)
    return matrix


def laplacian_spectrum(
    graph: Graph, potential: Sequence[float] | None = None, cap: int | None = None
) -> tuple[float, ...]:
    """All eigenvalues of ``D - A (+ diag ω)``, ascending, with multiplicity.

    Eigenvalues within ``1e-10 (1 + ||L||_inf)`` of each other are reported as
    one repeated value, and values that close to 0 as exactly 0.
    """
    require_size(graph, locascope_config.spectral_cap if cap is None else cap, "laplacian_spectrum")
    if potential is not None and len(potential) != graph.n:
        raise InvalidParameter(
            f"Potential has {len(potential)} entries for {graph.n} vertices",
            {"potential": len(potential), "vertices": graph.n},
        )
    if graph.n == 0:
        return ()
    matrix = laplacian_matrix(graph, potential)
    tol = 1e-10 * (1.0 + float(np.abs(matrix).sum(axis=1).max()))
    eigs = np.sort(np.linalg.eigvalsh(matrix))
    merged = _merge_clusters(eigs, tol)
    return tuple(0.0 if abs(x) <= tol else x for x in merged)


def spectral_cdf(eigs: Sequence[float], n: int) -> StepFunction:
    """``N(λ) = #{eigenvalues <= λ} / n``."""
    if len(eigs) != n:
        raise InvalidParameter(f"Expected {n} eigenvalues, got {len(eigs)}")
    jumps: list[float] = []
    values: list[float] = []
    for count, x in enumerate(sorted(eigs), start=1):
        if jumps and jumps[-1] == x:
            values[-1] = count / n
        else:
            jumps.append(float(x))
            values.append(count / n)
    return StepFunction(tuple(jumps), tuple(values), n)


def sup_distance(first: StepFunction, second: StepFunction) -> float:
    """``sup_λ |F1(λ) - F2(λ)|``, checked at every jump and just left of it."""
    worst = 0.0
    for x in sorted(set(first.jumps) | set(second.jumps)):
        worst = max(
            worst,
            abs(first(x) - second(x)),
            abs(first.left_limit(x) - second.left_limit(x)),
        )
    return worst
