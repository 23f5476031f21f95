"""Edit distance from union-closed monotone graph properties.

For monotone properties deleting edges is enough, so the distance of ``H`` is
the least number of edges whose removal lands in the property, divided by
``|V(H)|``.
"""

import itertools
import logging
import re
from collections import deque
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from ..config.settings import locascope_config
from ..graphs.base import Graph, InvalidParameter
from .base import require_size, split_components, two_coloring

logger = logging.getLogger(__name__)

_K_COLORABLE = re.compile(r"^k_colorable[:(](\d+)\)?$")


class GraphProperty(BaseModel):
    """A union-closed monotone property tag."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["bipartite", "forest", "k_colorable", "triangle_free"]
    k: int = Field(default=2, ge=2)

    @classmethod
    def parse(cls, text: str) -> "GraphProperty":
        """Accepts ``bipartite``, ``forest``, ``triangle_free``, ``k_colorable:3``."""
        tag = text.strip().lower()
        match = _K_COLORABLE.match(tag)
        if match:
            return cls(kind="k_colorable", k=int(match.group(1)))
        if tag in {"bipartite", "forest", "triangle_free"}:
            return cls(kind=tag)
        raise InvalidParameter(f"Unknown property '{text}'", {"property": text})

    @property
    def label(self) -> str:
        return f"k_colorable:{self.k}" if self.kind == "k_colorable" else self.kind

    @property
    def colors(self) -> int | None:
        if self.kind == "bipartite":
            return 2
        if self.kind == "k_colorable":
            return self.k
        return None


def _bfs_order(graph: Graph) -> list[int]:
    order = [0]
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in graph.adjacency[v]:
            if u not in seen:
                seen.add(u)
                order.append(u)
                queue.append(u)
    return order


def _conflicts(graph: Graph, colors: list[int]) -> int:
    return sum(1 for u, v in graph.edges() if colors[u] == colors[v])


def _local_search(graph: Graph, k: int, order: list[int]) -> list[int]:
    """Greedy colouring followed by single-vertex recolouring to a local optimum."""
    colors = [-1] * graph.n
    for v in order:
        counts = [0] * k
        for u in graph.adjacency[v]:
            if colors[u] >= 0:
                counts[colors[u]] += 1
        colors[v] = counts.index(min(counts))
    improved = True
    while improved:
        improved = False
        for v in order:
            counts = [0] * k
            for u in graph.adjacency[v]:
                counts[colors[u]] += 1
            best = counts.index(min(counts))
            if counts[best] < counts[colors[v]]:
                colors[v] = best
                improved = True
    return colors


def _min_conflicts_connected(graph: Graph, k: int) -> int:
    """Fewest monochromatic edges over all ``k``-colourings of a connected graph.

    Branch and bound along a BFS order; colours are introduced in order, which
    removes the permutation symmetry of the palette.
    """
    order = _bfs_order(graph)
    position = {v: i for i, v in enumerate(order)}
    earlier = [[u for u in graph.adjacency[v] if position[u] < i] for i, v in enumerate(order)]
    best = [_conflicts(graph, _local_search(graph, k, order))]
    colors = [-1] * graph.n

    def extend(i: int, conflicts: int, used: int) -> None:
        if conflicts >= best[0]:
            return
        if i == graph.n:
            best[0] = conflicts
            return
        v = order[i]
        options = sorted(
            (sum(1 for u in earlier[i] if colors[u] == c), c) for c in range(min(used + 1, k))
        )
        for cost, c in options:
            colors[v] = c
            extend(i + 1, conflicts + cost, max(used, c + 1))
        colors[v] = -1

    extend(0, 0, 0)
    return best[0]


def _greedy_colorable(graph: Graph, k: int) -> bool:
    colors = [-1] * graph.n
    for v in range(graph.n):
        taken = {colors[u] for u in graph.adjacency[v]}
        color = next(c for c in itertools.count() if c not in taken)
        if color >= k:
            return False
        colors[v] = color
    return True


def min_coloring_deletions(graph: Graph, k: int, cap: int | None = None) -> int:
    """Fewest edges to delete so that ``graph`` becomes ``k``-colourable."""
    if two_coloring(graph) is not None or _greedy_colorable(graph, k):
        return 0
    cap = locascope_config.coloring_cap if cap is None else cap
    total = 0
    for part in split_components(graph, range(graph.n)):
        if two_coloring(part) is not None or _greedy_colorable(part, k):
            continue
        require_size(part, cap, f"dist_to_property(k_colorable:{k})")
        total += _min_conflicts_connected(part, k)
    return total


def _triangles(graph: Graph) -> list[tuple[tuple[int, int], ...]]:
    found = []
    for u, v in graph.edges():
        for w in set(graph.adjacency[u]) & set(graph.adjacency[v]):
            if w > v:
                found.append(((u, v), (u, w), (v, w)))
    return found


def _min_triangle_hitting_set(triangles: list[tuple[tuple[int, int], ...]]) -> int:
    """Fewest edges meeting every triangle, by branch and bound.

    Branches over the edges of one unhit triangle; an edge refused in an
    earlier branch stays refused below it. The bound is the larger of an
    edge-disjoint packing of unhit triangles and ``ceil(unhit / best edge
    coverage)``.
    """
    containing: dict[tuple[int, int], list[int]] = {}
    for index, triangle in enumerate(triangles):
        for edge in triangle:
            containing.setdefault(edge, []).append(index)
    hits = [0] * len(triangles)
    refused: set[tuple[int, int]] = set()

    def coverage(edge: tuple[int, int]) -> int:
        return sum(1 for t in containing[edge] if not hits[t])

    def lower_bound(unhit: list[int]) -> int:
        used: set[tuple[int, int]] = set()
        packing = 0
        for t in unhit:
            if not used.intersection(triangles[t]):
                used.update(triangles[t])
                packing += 1
        widest = max(coverage(edge) for t in unhit for edge in triangles[t])
        return max(packing, -(-len(unhit) // widest))

    def take(edge: tuple[int, int], step: int) -> None:
        for t in containing[edge]:
            hits[t] += step

    greedy: list[tuple[int, int]] = []
    while any(not h for h in hits):
        edge = max(containing, key=coverage)
        take(edge, 1)
        greedy.append(edge)
    for edge in greedy:
        take(edge, -1)
    best = [len(greedy)]

    def search(chosen: int) -> None:
        unhit = [t for t, h in enumerate(hits) if not h]
        if not unhit:
            best[0] = min(best[0], chosen)
            return
        if chosen + lower_bound(unhit) >= best[0]:
            return
        options = min(([e for e in triangles[t] if e not in refused] for t in unhit), key=len)
        options.sort(key=coverage, reverse=True)
        newly_refused = []
        for edge in options:
            take(edge, 1)
            search(chosen + 1)
            take(edge, -1)
            refused.add(edge)
            newly_refused.append(edge)
        refused.difference_update(newly_refused)

    search(0)
    return best[0]


def min_triangle_deletions(graph: Graph, cap: int | None = None) -> int:
    """Smallest edge set meeting every triangle, summed over components."""
    cap = locascope_config.coloring_cap if cap is None else cap
    total = 0
    for part in split_components(graph, range(graph.n)):
        triangles = _triangles(part)
        if not triangles:
            continue
        require_size(part, cap, "dist_to_property(triangle_free)")
        total += _min_triangle_hitting_set(triangles)
    return total


def dist_to_property(graph: Graph, prop: GraphProperty | str, cap: int | None = None) -> float:
    """``min |E(H) \\ E(H')| / |V(H)|`` over spanning subgraphs ``H'`` in ``prop``."""
    if isinstance(prop, str):
        prop = GraphProperty.parse(prop)
    if graph.n == 0:
        return 0.0
    if prop.kind == "forest":
        deletions = graph.num_edges - graph.n + len(graph.connected_components())
    elif prop.kind == "triangle_free":
        deletions = min_triangle_deletions(graph, cap)
    else:
        deletions = min_coloring_deletions(graph, prop.colors or 2, cap)
    logger.debug(f"{prop.label}: {deletions} deletions on {graph.n} vertices")
    return deletions / graph.n
