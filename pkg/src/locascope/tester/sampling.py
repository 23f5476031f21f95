"""Sampled neighbourhood statistics."""

import logging
from collections import Counter
from collections.abc import MutableMapping
from dataclasses import dataclass

from ..graphs.balls import NeighborOracle
from ..graphs.base import Graph, InvalidParameter
from ..graphs.canon import BallCode
from ..graphs.stats import NeighborhoodDistribution, ball_codes, distribution_from_counts
from ..utils.rng import counter_rng

logger = logging.getLogger(__name__)

CodeCache = MutableMapping[int, tuple[BallCode, ...]]


@dataclass(frozen=True)
class EmpiricalDistribution(NeighborhoodDistribution):
    """Statistics of ``sample_size`` roots drawn with ``seed``."""

    seed: int = 0

    @property
    def k(self) -> int:
        return self.sample_size or 0


class CountingGraph:
    """Wraps a graph and counts neighbour queries."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n
        self.degree_bound = graph.degree_bound
        self.queries = 0

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.queries += 1
        return self.graph.neighbors(v)


def sample_roots(n: int, k: int, seed: int) -> list[int]:
    """``k`` roots uniform on ``0..n-1`` with replacement."""
    rng = counter_rng(seed)
    return [int(v) for v in rng.integers(0, n, size=k)]


def sample_stats(
    graph: NeighborOracle,
    r: int,
    k: int,
    seed: int,
    cache: CodeCache | None = None,
) -> EmpiricalDistribution:
    """Empirical ball statistics of ``k`` random roots.

    ``cache`` maps a vertex to its codes for radii ``0..r``; pass the same
    mapping for repeated runs on one graph and radius.
    """
    if k < 1:
        raise InvalidParameter(f"Sample size must be at least 1, got {k}", {"k": k})
    if graph.n < 1:
        raise InvalidParameter("Cannot sample roots from an empty graph")
    if r < 0:
        raise InvalidParameter(f"Radius must be non-negative, got {r}", {"radius": r})

    counts: dict[int, Counter] = {s: Counter() for s in range(r + 1)}
    for v in sample_roots(graph.n, k, seed):
        codes = cache.get(v) if cache is not None else None
        if codes is None:
            codes = ball_codes(graph, v, r)
            if cache is not None:
                cache[v] = codes
        for s, code in enumerate(codes):
            counts[s][code] += 1

    base = distribution_from_counts(r, counts, k, k)
    logger.debug(f"Sampled {k} roots at radius {r} with seed {seed}")
    return EmpiricalDistribution(base.radius, base.frequencies, k, seed)
