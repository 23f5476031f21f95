"""Girth computation and random regular graphs of large girth."""

import logging
import math
from collections import deque

from ..config.settings import locascope_config
from ..graphs.base import Graph, build_graph
from ..solvers.base import two_coloring
from ..utils.rng import counter_rng
from .spec_parser import InfeasibleSpec

logger = logging.getLogger(__name__)


def girth(graph: Graph) -> int | float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best: int | float = math.inf
    for root in range(graph.n):
        distance = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * distance[v] >= best:
                break
            for u in graph.adjacency[v]:
                if u not in distance:
                    distance[u] = distance[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, distance[u] + distance[v] + 1)
    return best


def _within(adjacency: list[list[int]], source: int, depth: int) -> set[int]:
    """Vertices at distance at most ``depth`` from ``source``."""
    seen = {source}
    frontier = [source]
    for _ in range(depth):
        layer = []
        for v in frontier:
            for u in adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    layer.append(u)
        if not layer:
            break
        frontier = layer
    return seen


def _attempt(n: int, d: int, g: int, bipartite: bool, rng) -> list[tuple[int, int]] | None:
    """One greedy pairing run; ``None`` when it gets stuck.

    Each step takes a vertex with the most free stubs and joins it to a
    random vertex with a free stub at distance at least ``g - 1``.
    """
    adjacency: list[list[int]] = [[] for _ in range(n)]
    free = [d] * n
    half = n // 2
    for _ in range(n * d // 2):
        most = max(free)
        if most == 0:
            break
        pending = [v for v in range(n) if free[v] == most]
        u = pending[int(rng.integers(len(pending)))]
        near = _within(adjacency, u, g - 2)
        candidates = [
            w
            for w in range(n)
            if free[w] > 0 and w not in near and (not bipartite or (w < half) != (u < half))
        ]
        if not candidates:
            return None
        w = candidates[int(rng.integers(len(candidates)))]
        adjacency[u].append(w)
        adjacency[w].append(u)
        free[u] -= 1
        free[w] -= 1
    return [(u, w) for u in range(n) for w in adjacency[u] if u < w]


def random_regular_girth(
    n: int,
    d: int,
    g: int,
    seed: int,
    bipartite: bool | None = None,
    retries: int | None = None,
) -> Graph:
    """A ``d``-regular graph on ``n`` vertices with girth at least ``g``.

    ``bipartite=True`` joins the halves ``0..n/2-1`` and ``n/2..n-1`` only;
    ``bipartite=False`` rejects bipartite results; ``None`` accepts either.
    Deterministic for a given seed.
    """
    retries = locascope_config.girth_retries if retries is None else retries
    rng = counter_rng(seed)
    for attempt in range(1, retries + 1):
        edges = _attempt(n, d, g, bool(bipartite), rng)
        if edges is None or len(edges) != n * d // 2:
            continue
        graph = build_graph(n, edges, d)
        if bipartite is False and two_coloring(graph) is not None:
            continue
        logger.debug(f"Girth-{g} {d}-regular graph on {n} vertices after {attempt} attempts")
        return graph
    raise InfeasibleSpec(
        f"No {d}-regular graph on {n} vertices with girth >= {g} found in {retries} attempts",
        {"n": n, "d": d, "g": g, "seed": seed, "retries": retries},
    )
