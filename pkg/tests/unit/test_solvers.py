"""Unit tests for the exact combinatorial kernels."""

import math
import threading

import networkx as nx
import pytest

from locascope.generators import cycle, grid2d, path, triangular
from locascope.graphs import Graph, InvalidParameter, build_graph
from locascope.solvers import (
    ComponentTooLarge,
    CountPolynomial,
    GraphProperty,
    dist_to_property,
    eval_log_partition,
    independence_number,
    independence_polynomial,
    matching_number,
    matching_polynomial,
    max_independent_set,
    max_matching,
    two_coloring,
)

from ..oracles import (
    brute_bipartite_deletions,
    brute_coloring_conflicts,
    brute_independent_sets,
    brute_matchings,
    brute_triangle_deletions,
    random_bounded_graph,
)


def _star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)], leaves)


def _is_independent(graph: Graph, vertices) -> bool:
    return all(not graph.has_edge(u, v) for u in vertices for v in vertices if u < v)


class TestMaxIndependentSet:
    """Test cases for max_independent_set."""

    def test_triangle(self, triangle):
        assert independence_number(triangle) == 1

    def test_c5(self):
        result = max_independent_set(cycle(5))
        assert len(result) == 2
        assert _is_independent(cycle(5), result)

    def test_p4(self, path4):
        result = max_independent_set(path4)
        assert len(result) == 2
        assert _is_independent(path4, result)

    def test_petersen(self, petersen):
        assert independence_number(petersen) == 4

    def test_edgeless(self):
        assert independence_number(build_graph(6, [], 1)) == 6

    def test_bipartite_has_no_cap(self):
        """Test that large bipartite components go through König's theorem."""
        grid = grid2d(12, 12)
        result = max_independent_set(grid, cap=10)
        assert len(result) == 72
        assert _is_independent(grid, result)

    def test_cap_on_odd_cycles(self):
        with pytest.raises(ComponentTooLarge) as exc_info:
            max_independent_set(cycle(21), cap=20)
        assert exc_info.value.size == 21
        assert exc_info.value.cap == 20

    def test_random_graphs_against_networkx(self):
        """Test independence numbers against networkx maximum cliques of complements."""
        for seed in range(8):
            graph = random_bounded_graph(14, 3, 40, seed)
            complement = nx.complement(graph.to_networkx())
            clique, _ = nx.max_weight_clique(complement, weight=None)
            assert independence_number(graph) == len(clique)

    def test_edge_removal_never_decreases(self):
        graph = random_bounded_graph(18, 3, 60, seed=11)
        base = independence_number(graph)
        for edge in list(graph.edges())[:6]:
            assert independence_number(graph.without_edges([edge])) >= base


class TestMaxMatching:
    """Test cases for max_matching."""

    def test_single_edge(self):
        assert matching_number(path(2)) == 1

    def test_c5(self):
        matching = max_matching(cycle(5))
        assert len(matching) == 2
        endpoints = [v for edge in matching for v in edge]
        assert len(endpoints) == len(set(endpoints))

    def test_star(self):
        assert matching_number(_star(4)) == 1

    def test_petersen_perfect(self, petersen):
        assert matching_number(petersen) == 5

    def test_edgeless(self):
        assert matching_number(build_graph(4, [], 1)) == 0


class TestIndependencePolynomial:
    """Test cases for independence_polynomial."""

    def test_k1(self):
        assert independence_polynomial(path(1)).to_list() == [1, 1]

    def test_k3(self, triangle):
        assert independence_polynomial(triangle).to_list() == [1, 3]

    def test_p3(self):
        assert independence_polynomial(path(3)).to_list() == [1, 3, 1]

    def test_edgeless_is_binomial(self):
        assert independence_polynomial(build_graph(4, [], 1)).to_list() == [1, 4, 6, 4, 1]

    def test_path_fibonacci(self):
        """Test that π^I(P_n, 1) is the Fibonacci number F(n + 2)."""
        fib = [0, 1]
        while len(fib) < 25:
            fib.append(fib[-1] + fib[-2])
        for n in (5, 10, 20):
            assert sum(independence_polynomial(path(n)).coefficients) == fib[n + 2]

    def test_matches_enumeration(self, petersen):
        assert independence_polynomial(petersen).to_list() == brute_independent_sets(petersen)

    def test_degree_is_independence_number(self):
        graph = random_bounded_graph(12, 3, 30, seed=2)
        polynomial = independence_polynomial(graph)
        assert polynomial.degree == independence_number(graph)
        assert polynomial.coefficients[0] == 1

    def test_disjoint_union_is_product(self, triangle):
        union = Graph.disjoint_union([triangle, path(4), triangle])
        expected = independence_polynomial(triangle) * independence_polynomial(path(4)) * independence_polynomial(triangle)
        assert independence_polynomial(union) == expected

    def test_cap(self):
        with pytest.raises(ComponentTooLarge):
            independence_polynomial(path(10), cap=9)


class TestMatchingPolynomial:
    """Test cases for matching_polynomial."""

    def test_k2(self):
        assert matching_polynomial(path(2)).to_list() == [1, 1]

    def test_c4(self):
        assert matching_polynomial(cycle(4)).to_list() == [1, 4, 2]

    def test_p3(self):
        assert matching_polynomial(path(3)).to_list() == [1, 2]

    def test_edgeless(self):
        assert matching_polynomial(build_graph(3, [], 1)).to_list() == [1]

    def test_matches_enumeration(self, petersen):
        assert matching_polynomial(petersen).to_list() == brute_matchings(petersen)
        small_grid = grid2d(3, 4)
        assert matching_polynomial(small_grid).to_list() == brute_matchings(small_grid)

    def test_degree_is_matching_number(self):
        graph = random_bounded_graph(12, 3, 30, seed=4)
        assert matching_polynomial(graph).degree == matching_number(graph)


class TestCountPolynomial:
    """Test cases for CountPolynomial arithmetic and evaluation."""

    def test_arithmetic(self):
        left = CountPolynomial((1, 1))
        right = CountPolynomial((1, 2, 1))
        assert (left * right).to_list() == [1, 3, 3, 1]
        assert (left + right).to_list() == [2, 3, 1]
        assert left.shifted().to_list() == [0, 1, 1]

    def test_eval_constant(self):
        assert eval_log_partition(CountPolynomial.one(), 3.0) == 0.0

    def test_eval_log_two(self):
        assert eval_log_partition(CountPolynomial((1, 1)), 1.0) == pytest.approx(math.log(2))

    def test_eval_p3_at_two(self):
        assert eval_log_partition(CountPolynomial((1, 3, 1)), 2.0) == pytest.approx(math.log(11))

    def test_eval_large_coefficients_stable(self):
        polynomial = CountPolynomial(tuple([10**300] * 5))
        expected = 300 * math.log(10) + math.log(5)
        assert eval_log_partition(polynomial, 1.0) == pytest.approx(expected)

    def test_eval_rejects_non_positive_lambda(self):
        with pytest.raises(InvalidParameter):
            eval_log_partition(CountPolynomial((1, 1)), 0.0)


class TestDistToProperty:
    """Test cases for dist_to_property."""

    def test_triangle_bipartite(self, triangle):
        assert dist_to_property(triangle, "bipartite") == pytest.approx(1 / 3)

    def test_tree_forest(self):
        assert dist_to_property(path(7), "forest") == 0.0

    def test_c5_forest(self):
        assert dist_to_property(cycle(5), "forest") == pytest.approx(1 / 5)

    def test_bipartite_shortcut(self, grid5):
        assert two_coloring(grid5) is not None
        assert dist_to_property(grid5, "bipartite", cap=3) == 0.0

    def test_k4_three_colorable(self, k4):
        assert dist_to_property(k4, "k_colorable:3") == pytest.approx(1 / 4)
        assert dist_to_property(k4, GraphProperty(kind="k_colorable", k=4)) == 0.0

    def test_k4_bipartite(self, k4):
        assert dist_to_property(k4, "bipartite") == pytest.approx(2 / 4)

    def test_petersen_bipartite(self, petersen):
        assert dist_to_property(petersen, "bipartite") == pytest.approx(brute_bipartite_deletions(petersen) / 10)

    def test_random_graphs_against_enumeration(self):
        for seed in range(6):
            graph = random_bounded_graph(9, 3, 25, seed)
            assert dist_to_property(graph, "bipartite") * 9 == pytest.approx(brute_bipartite_deletions(graph))
            assert dist_to_property(graph, "k_colorable:3") * 9 == pytest.approx(brute_coloring_conflicts(graph, 3))

    def test_triangle_free(self, k4):
        """Test that K_4 needs two deletions to lose all four triangles."""
        assert dist_to_property(k4, "triangle_free") == pytest.approx(2 / 4)
        assert dist_to_property(cycle(5), "triangle_free") == 0.0

    def test_triangle_free_lattice_finishes(self):
        """Test that a 20-vertex triangular patch resolves to one deletion per square."""
        result: list[float] = []
        worker = threading.Thread(
            target=lambda: result.append(dist_to_property(triangular(4, 5), "triangle_free")),
            daemon=True,
        )
        worker.start()
        worker.join(timeout=30)
        assert result == [pytest.approx(12 / 20)]

    def test_triangle_free_against_enumeration(self, k4):
        graphs = [k4, triangular(3, 3), triangular(2, 4)]
        graphs += [random_bounded_graph(8, 4, 40, seed) for seed in range(8)]
        for graph in graphs:
            assert dist_to_property(graph, "triangle_free") * graph.n == pytest.approx(
                brute_triangle_deletions(graph)
            )

    def test_triangle_free_cap_is_per_component(self, triangle):
        union = Graph.disjoint_union([triangle] * 10)
        assert dist_to_property(union, "triangle_free", cap=3) == pytest.approx(10 / 30)
        with pytest.raises(ComponentTooLarge):
            dist_to_property(triangular(4, 5), "triangle_free", cap=19)

    def test_coloring_cap(self):
        graph = cycle(23)
        with pytest.raises(ComponentTooLarge):
            dist_to_property(graph, "bipartite", cap=20)

    def test_edgeless(self):
        graph = build_graph(4, [], 1)
        for tag in ("bipartite", "forest", "k_colorable:3", "triangle_free"):
            assert dist_to_property(graph, tag) == 0.0

    def test_property_parsing(self):
        assert GraphProperty.parse("k_colorable(3)").k == 3
        assert GraphProperty.parse("Bipartite").kind == "bipartite"
        with pytest.raises(InvalidParameter):
            GraphProperty.parse("planar")
