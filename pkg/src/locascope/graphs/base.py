"""Bounded-degree graph representation and the shared exception hierarchy."""

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Any

import networkx as nx


class LocascopeError(Exception):
    """Base exception for every error raised by locascope."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        self.message = message
        self.details = details or {}
        super().__init__(message)

    def to_dict(self) -> dict[str, Any]:
        """Machine-readable form used by the CLI."""
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


class InvalidEdge(LocascopeError, ValueError):
    """Raised for self-loops, duplicate edges and out-of-range endpoints."""

    def __init__(self, message: str, edge: tuple[int, int]):
        super().__init__(message, {"edge": list(edge)})
        self.edge = edge


class DegreeBoundExceeded(LocascopeError, ValueError):
    """Raised when a vertex has more neighbours than the declared bound."""

    def __init__(self, vertex: int, degree: int, bound: int):
        super().__init__(
            f"Vertex {vertex} has degree {degree} > degree bound {bound}",
            {"vertex": vertex, "degree": degree, "degree_bound": bound},
        )
        self.vertex = vertex


class NotConnected(LocascopeError, ValueError):
    """Raised when an operation requires a connected graph."""


class VertexSetMismatch(LocascopeError, ValueError):
    """Raised when two graphs must share a vertex set but do not."""


class InvalidParameter(LocascopeError, ValueError):
    """Raised for out-of-range numeric parameters (delta, lambda, radius, ...)."""


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Instances are
    normally created through :func:`build_graph`, which validates them.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    degree_bound: int

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Iterate edges as sorted pairs ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``vertices``, relabelled in the given order.

        Returns the subgraph and the back-map from new to original ids.
        """
        back_map = tuple(vertices)
        index = {v: i for i, v in enumerate(back_map)}
        adjacency = tuple(
            tuple(sorted(index[u] for u in self.adjacency[v] if u in index))
            for v in back_map
        )
        return Graph(len(back_map), adjacency, self.degree_bound), back_map

    def connected_components(self) -> list[list[int]]:
        """Vertex lists of the components, each sorted, ordered by smallest id."""
        seen = [False] * self.n
        components: list[list[int]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            members = [start]
            while queue:
                v = queue.popleft()
                for u in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        members.append(u)
                        queue.append(u)
            members.sort()
            components.append(members)
        return components

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.connected_components()) == 1

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        """Spanning subgraph with the given edges deleted."""
        drop = {(min(u, v), max(u, v)) for u, v in removed}
        adjacency = tuple(
            tuple(u for u in nbrs if (min(u, v), max(u, v)) not in drop)
            for v, nbrs in enumerate(self.adjacency)
        )
        return Graph(self.n, adjacency, self.degree_bound)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def disjoint_union(cls, parts: Sequence["Graph"]) -> "Graph":
        """Disjoint union, vertices of ``parts[i]`` shifted past earlier parts."""
        adjacency: list[tuple[int, ...]] = []
        offset = 0
        for part in parts:
            adjacency.extend(tuple(u + offset for u in nbrs) for nbrs in part.adjacency)
            offset += part.n
        bound = max((p.degree_bound for p in parts), default=1)
        return cls(offset, tuple(adjacency), bound)


def build_graph(n: int, edges: Iterable[tuple[int, int]], d: int) -> Graph:
    """Validate an edge list and build a :class:`Graph` with degree bound ``d``."""
    if n < 0:
        raise LocascopeError(f"Vertex count must be non-negative, got {n}")
    if d < 1:
        raise LocascopeError(f"Degree bound must be positive, got {d}")
    neighbours: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}", (u, v))
        if u == v:
            raise InvalidEdge(f"Self-loop at vertex {u}", (u, v))
        if v in neighbours[u]:
            raise InvalidEdge(f"Duplicate edge ({u}, {v})", (u, v))
        neighbours[u].add(v)
        neighbours[v].add(u)
    for v, nbrs in enumerate(neighbours):
        if len(nbrs) > d:
            raise DegreeBoundExceeded(v, len(nbrs), d)
    return Graph(n, tuple(tuple(sorted(nbrs)) for nbrs in neighbours), d)


def edge_distance(g: Graph, h: Graph) -> float:
    """``|E(G) △ E(H)| / |V|`` for two graphs on the same vertex set."""
    if g.n != h.n:
        raise VertexSetMismatch(
            f"Graphs have {g.n} and {h.n} vertices",
            {"left": g.n, "right": h.n},
        )
    if g.n == 0:
        return 0.0
    return len(set(g.edges()) ^ set(h.edges())) / g.n
