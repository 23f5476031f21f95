"""Maximum independent sets and the independence polynomial."""

import logging

import networkx as nx

from ..config.settings import locascope_config
from ..graphs.base import Graph
from ..graphs.canon import ComponentCode, canonical_component_code
from .base import (
    CountPolynomial,
    memoized_over_components,
    require_size,
    split_components,
    two_coloring,
)

logger = logging.getLogger(__name__)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _component_of_lowest(neighbours: list[int], mask: int) -> int:
    component = frontier = mask & -mask
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= neighbours[v]
        frontier = reach & mask & ~component
        component |= frontier
    return component


def _mis_mask(neighbours: list[int], mask: int, memo: dict[int, int]) -> int:
    """Maximum independent subset of ``mask`` as a bitmask.

    A vertex of degree at most one always belongs to some maximum independent
    set; otherwise branch on a vertex of maximum degree. Disconnected masks are
    solved piecewise.
    """
    if mask == 0:
        return 0
    cached = memo.get(mask)
    if cached is not None:
        return cached

    component = _component_of_lowest(neighbours, mask)
    if component != mask:
        result = _mis_mask(neighbours, component, memo) | _mis_mask(neighbours, mask & ~component, memo)
        memo[mask] = result
        return result

    low_v, low_deg, high_v, high_deg = -1, 1 << 30, -1, -1
    for v in _bits(mask):
        degree = (neighbours[v] & mask).bit_count()
        if degree < low_deg:
            low_v, low_deg = v, degree
        if degree > high_deg:
            high_v, high_deg = v, degree

    if low_deg <= 1:
        bit = 1 << low_v
        result = bit | _mis_mask(neighbours, mask & ~(bit | neighbours[low_v]), memo)
    else:
        bit = 1 << high_v
        without = _mis_mask(neighbours, mask & ~bit, memo)
        with_v = bit | _mis_mask(neighbours, mask & ~(bit | neighbours[high_v]), memo)
        result = without if without.bit_count() >= with_v.bit_count() else with_v
    memo[mask] = result
    return result


def _konig_independent_set(graph: Graph, coloring: list[int]) -> frozenset[int]:
    nx_graph = graph.to_networkx()
    top = {v for v in range(graph.n) if coloring[v] == 0}
    matching = nx.bipartite.hopcroft_karp_matching(nx_graph, top_nodes=top)
    cover = nx.bipartite.to_vertex_cover(nx_graph, matching, top_nodes=top)
    return frozenset(v for v in range(graph.n) if v not in cover)


def max_independent_set(graph: Graph, cap: int | None = None) -> frozenset[int]:
    """A maximum independent set of ``graph``.

    Bipartite graphs go through König's theorem and have no size limit; other
    graphs use exact branch and bound below ``cap`` vertices.
    """
    if graph.n == 0:
        return frozenset()
    coloring = two_coloring(graph)
    if coloring is not None:
        return _konig_independent_set(graph, coloring)

    require_size(graph, locascope_config.component_cap if cap is None else cap, "max_independent_set")
    neighbours = [sum(1 << u for u in nbrs) for nbrs in graph.adjacency]
    best = _mis_mask(neighbours, (1 << graph.n) - 1, {})
    return frozenset(_bits(best))


def independence_number(graph: Graph, cap: int | None = None) -> int:
    return len(max_independent_set(graph, cap))


def _independence_connected(
    component: Graph, memo: dict[ComponentCode, CountPolynomial]
) -> CountPolynomial:
    """``π(H) = π(H - v) + λ π(H - N[v])`` on a connected piece, memoized by class."""
    if component.n == 1:
        return CountPolynomial((1, 1))
    code = canonical_component_code(component)
    cached = memo.get(code)
    if cached is not None:
        return cached

    v = max(range(component.n), key=lambda w: (len(component.adjacency[w]), -w))
    closed = {v, *component.adjacency[v]}
    without_v = [w for w in range(component.n) if w != v]
    without_closed = [w for w in range(component.n) if w not in closed]

    result = CountPolynomial.one()
    for part in split_components(component, without_v):
        result = result * _independence_connected(part, memo)
    taken = CountPolynomial.one()
    for part in split_components(component, without_closed):
        taken = taken * _independence_connected(part, memo)
    result = result + taken.shifted()
    memo[code] = result
    return result


def independence_polynomial(graph: Graph, cap: int | None = None) -> CountPolynomial:
    """Exact ``π^I_H(λ) = Σ_{S independent} λ^{|S|}``."""
    require_size(graph, locascope_config.component_cap if cap is None else cap, "independence_polynomial")
    memo: dict[ComponentCode, CountPolynomial] = {}
    polynomial = memoized_over_components(graph, _independence_connected, memo)
    logger.debug(f"Independence polynomial of {graph.n} vertices via {len(memo)} memoized classes")
    return polynomial
