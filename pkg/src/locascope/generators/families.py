"""Lattice families, their Følner sequences, and the :func:`generate` dispatcher."""

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass

from ..graphs.base import Graph, build_graph
from .girth import random_regular_girth
from .spec_parser import FamilySpec, InfeasibleSpec

logger = logging.getLogger(__name__)

LATTICE_DEGREE = {
    "path": 2,
    "cycle": 2,
    "grid2d": 4,
    "torus2d": 4,
    "cube3d": 6,
    "triangular": 6,
    "ladder": 3,
}


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], 2)


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], 2)


def grid2d(a: int, b: int) -> Graph:
    """``a x b`` grid, vertex ``(i, j)`` numbered ``i * b + j``."""
    edges = [(i * b + j, i * b + j + 1) for i in range(a) for j in range(b - 1)]
    edges += [(i * b + j, (i + 1) * b + j) for i in range(a - 1) for j in range(b)]
    return build_graph(a * b, edges, 4)


def torus2d(a: int, b: int) -> Graph:
    edges = [(i * b + j, i * b + (j + 1) % b) for i in range(a) for j in range(b)]
    edges += [(i * b + j, ((i + 1) % a) * b + j) for i in range(a) for j in range(b)]
    return build_graph(a * b, edges, 4)


def triangular(a: int, b: int) -> Graph:
    """Grid plus the diagonals ``(i, j) - (i + 1, j + 1)``."""
    grid = grid2d(a, b)
    diagonals = [(i * b + j, (i + 1) * b + j + 1) for i in range(a - 1) for j in range(b - 1)]
    return build_graph(a * b, list(grid.edges()) + diagonals, 6)


def ladder(n: int) -> Graph:
    """Two paths of length ``n`` joined by rungs; vertex ``(side, i)`` is ``side * n + i``."""
    edges = [(side * n + i, side * n + i + 1) for side in range(2) for i in range(n - 1)]
    edges += [(i, n + i) for i in range(n)]
    return build_graph(2 * n, edges, 3)


def cube3d(n: int) -> Graph:
    """Grid graph induced on ``{-n, ..., n}^3``."""
    side = 2 * n + 1
    index = {point: k for k, point in enumerate(itertools.product(range(side), repeat=3))}
    edges = []
    for (x, y, z), k in index.items():
        for step in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            neighbour = (x + step[0], y + step[1], z + step[2])
            if neighbour in index:
                edges.append((k, index[neighbour]))
    return build_graph(len(index), edges, 6)


def generate(spec: FamilySpec) -> Graph:
    """The graph named by ``spec``, deterministic given its fields."""
    dims = spec.dims
    match spec.family:
        case "path":
            graph = path(dims[0])
        case "cycle":
            graph = cycle(dims[0])
        case "grid2d":
            graph = grid2d(*dims)
        case "torus2d":
            graph = torus2d(*dims)
        case "cube3d":
            graph = cube3d(dims[0])
        case "triangular":
            graph = triangular(*dims)
        case "ladder":
            graph = ladder(dims[0])
        case "random_regular_girth":
            graph = random_regular_girth(dims[0], spec.d, spec.g, spec.seed, spec.bipartite)
        case "disjoint_union":
            graph = Graph.disjoint_union([generate(part) for part in spec.parts])
        case _:
            raise InfeasibleSpec(f"Unknown family {spec.family}")
    logger.debug(f"Generated {spec.label}: {graph.n} vertices, {graph.num_edges} edges")
    return graph


@dataclass(frozen=True)
class FolnerElement:
    graph: Graph
    size: int
    boundary_ratio: float


def boundary_ratio(graph: Graph, lattice_degree: int) -> float:
    """Fraction of vertices that have a neighbour outside the finite piece."""
    if graph.n == 0:
        return 0.0
    return sum(1 for v in range(graph.n) if graph.degree(v) < lattice_degree) / graph.n


_FOLNER_FAMILIES = ("path", "cycle", "grid2d", "cube3d", "triangular", "ladder")


def folner_sequence(spec: FamilySpec, sizes: Sequence[int]) -> list[FolnerElement]:
    """Nested finite pieces of an infinite lattice at the given sizes.

    Cycles are realized as arcs, that is paths, of the infinite line.
    """
    if spec.family not in _FOLNER_FAMILIES:
        raise InfeasibleSpec(
            f"{spec.family} has no Følner sequence here; use one of {', '.join(_FOLNER_FAMILIES)}",
            {"family": spec.family},
        )
    if not sizes:
        raise InfeasibleSpec("folner_sequence needs at least one size")
    if any(size < 1 for size in sizes):
        raise InfeasibleSpec(f"sizes must be positive, got {list(sizes)}")
    family = "path" if spec.family == "cycle" else spec.family
    degree = LATTICE_DEGREE[family]
    elements = []
    for size in sorted(sizes):
        graph = generate(FamilySpec(family=family, dims=(size,) * len(spec.dims)))
        elements.append(FolnerElement(graph, size, boundary_ratio(graph, degree)))
    logger.info(
        f"Følner sequence {family}: "
        + ", ".join(f"{e.size}->{e.boundary_ratio:.4g}" for e in elements)
    )
    return elements
