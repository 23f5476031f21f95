"""Maximum matchings and the matching polynomial."""

import logging

import networkx as nx

from ..config.settings import locascope_config
from ..graphs.base import Graph
from ..graphs.canon import ComponentCode, canonical_component_code
from .base import CountPolynomial, memoized_over_components, require_size, split_components

logger = logging.getLogger(__name__)


def max_matching(graph: Graph) -> frozenset[tuple[int, int]]:
    """A maximum-cardinality matching, edges as sorted pairs (blossom algorithm)."""
    matching = nx.max_weight_matching(graph.to_networkx(), maxcardinality=True)
    return frozenset((min(u, v), max(u, v)) for u, v in matching)


def matching_number(graph: Graph) -> int:
    return len(max_matching(graph))


def _matching_connected(
    component: Graph, memo: dict[ComponentCode, CountPolynomial]
) -> CountPolynomial:
    """Edge recursion expanded at one vertex ``v``.

    Applying ``π(H) = π(H - e) + λ π(H - {u, v})`` to every edge at ``v`` gives
    ``π(H) = π(H - v) + λ Σ_{u ~ v} π(H - v - u)``.
    """
    if component.n == 1:
        return CountPolynomial.one()
    code = canonical_component_code(component)
    cached = memo.get(code)
    if cached is not None:
        return cached

    v = min(range(component.n), key=lambda w: (len(component.adjacency[w]), w))
    others = [w for w in range(component.n) if w != v]

    result = CountPolynomial.one()
    for part in split_components(component, others):
        result = result * _matching_connected(part, memo)
    for u in component.adjacency[v]:
        paired = CountPolynomial.one()
        for part in split_components(component, [w for w in others if w != u]):
            paired = paired * _matching_connected(part, memo)
        result = result + paired.shifted()
    memo[code] = result
    return result


def matching_polynomial(graph: Graph, cap: int | None = None) -> CountPolynomial:
    """Exact ``π^M_H(λ) = Σ_{T matching} λ^{|T|}``."""
    require_size(graph, locascope_config.component_cap if cap is None else cap, "matching_polynomial")
    memo: dict[ComponentCode, CountPolynomial] = {}
    polynomial = memoized_over_components(graph, _matching_connected, memo)
    logger.debug(f"Matching polynomial of {graph.n} vertices via {len(memo)} memoized classes")
    return polynomial
