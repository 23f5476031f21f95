"""Breadth-first ball extraction."""

from dataclasses import dataclass
from typing import Protocol

from .base import Graph, LocascopeError


class NeighborOracle(Protocol):
    """Anything that answers neighbour queries like a :class:`Graph`."""

    n: int
    degree_bound: int

    def neighbors(self, v: int) -> tuple[int, ...]: ...


@dataclass(frozen=True, slots=True)
class RootedBall:
    """Induced subgraph on ``B_r(x)``, vertices relabelled in BFS order.

    The root is vertex 0. ``distances[i]`` is the host-graph distance from the
    root to ``host_vertices[i]``; BFS order makes it non-decreasing.
    """

    graph: Graph
    root: int
    radius: int
    host_vertices: tuple[int, ...]
    distances: tuple[int, ...]

    def restrict(self, s: int) -> "RootedBall":
        """The ball of radius ``s <= radius`` around the same root."""
        if s < 0 or s > self.radius:
            raise LocascopeError(f"Cannot restrict a radius-{self.radius} ball to radius {s}")
        if s == self.radius:
            return self
        size = 0
        while size < len(self.distances) and self.distances[size] <= s:
            size += 1
        adjacency = tuple(
            tuple(u for u in self.graph.adjacency[v] if u < size) for v in range(size)
        )
        return RootedBall(
            graph=Graph(size, adjacency, self.graph.degree_bound),
            root=0,
            radius=s,
            host_vertices=self.host_vertices[:size],
            distances=self.distances[:size],
        )


def ball(graph: NeighborOracle, v: int, r: int) -> RootedBall:
    """The rooted ``r``-ball around ``v``.

    Queries ``graph.neighbors`` exactly once per ball vertex.
    """
    if not 0 <= v < graph.n:
        raise LocascopeError(f"Vertex {v} is not in 0..{graph.n - 1}")
    if r < 0:
        raise LocascopeError(f"Radius must be non-negative, got {r}")

    order = [v]
    distance = {v: 0}
    rows: list[tuple[int, ...]] = []
    head = 0
    while head < len(order):
        w = order[head]
        head += 1
        nbrs = graph.neighbors(w)
        rows.append(nbrs)
        if distance[w] == r:
            continue
        for u in nbrs:
            if u not in distance:
                distance[u] = distance[w] + 1
                order.append(u)

    index = {w: i for i, w in enumerate(order)}
    adjacency = tuple(
        tuple(sorted(index[u] for u in nbrs if u in index)) for nbrs in rows
    )
    return RootedBall(
        graph=Graph(len(order), adjacency, graph.degree_bound),
        root=0,
        radius=r,
        host_vertices=tuple(order),
        distances=tuple(distance[w] for w in order),
    )
