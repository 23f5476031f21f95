"""Unit tests for neighbourhood statistics."""

from fractions import Fraction

import pytest

from locascope.generators import cycle, path
from locascope.graphs import (
    NeighborhoodDistribution,
    RadiusMismatch,
    ball_codes,
    neighborhood_distribution,
    stats_distance,
)

from ..oracles import random_bounded_graph


class TestNeighborhoodDistribution:
    """Test cases for exact neighbourhood statistics."""

    def test_cycle_single_class(self, c8):
        dist = neighborhood_distribution(c8, 1)
        assert dist.is_exact
        assert list(dist.at(1).values()) == [Fraction(1)]

    def test_path_endpoint_and_interior(self, path4):
        dist = neighborhood_distribution(path4, 1)
        assert sorted(dist.at(1).values()) == [Fraction(1, 2), Fraction(1, 2)]

    def test_radius_zero_single_vertex_class(self, grid5):
        dist = neighborhood_distribution(grid5, 0)
        assert list(dist.at(0).values()) == [Fraction(1)]

    def test_every_radius_sums_to_one(self, grid5):
        dist = neighborhood_distribution(grid5, 2)
        for s in range(3):
            assert sum(dist.at(s).values()) == 1
            assert all(freq >= 0 for freq in dist.at(s).values())

    def test_ball_codes_one_per_radius(self, grid5):
        codes = ball_codes(grid5, 12, 2)
        assert [code.radius for code in codes] == [0, 1, 2]

    def test_dict_round_trip(self, grid5):
        dist = neighborhood_distribution(grid5, 2)
        restored = NeighborhoodDistribution.from_dict(dist.to_dict(), 4)
        assert restored.radius == 2
        assert stats_distance(dist, restored) == pytest.approx(0.0, abs=1e-15)


class TestStatsDistance:
    """Test cases for stats_distance."""

    def test_self_distance_zero(self, grid5):
        dist = neighborhood_distribution(grid5, 1)
        assert stats_distance(dist, dist) == 0.0

    def test_cycles_of_different_length(self):
        """Test that long cycles are indistinguishable at small radius."""
        first = neighborhood_distribution(cycle(1000), 2)
        second = neighborhood_distribution(cycle(1001), 2)
        assert stats_distance(first, second) == 0.0

    def test_path_versus_cycle(self):
        """Test that endpoint classes account for the whole distance at radius 1."""
        dist = stats_distance(neighborhood_distribution(path(10), 1), neighborhood_distribution(cycle(10), 1))
        assert dist == pytest.approx(0.2)

    def test_radius_mismatch(self, c8):
        with pytest.raises(RadiusMismatch):
            stats_distance(neighborhood_distribution(c8, 1), neighborhood_distribution(c8, 2))

    @pytest.mark.parametrize("r", [1, 2])
    def test_pseudometric_on_random_triples(self, r):
        for seed in range(30):
            a, b, c = (
                neighborhood_distribution(random_bounded_graph(n, 3, 3 * n, seed * 3 + i), r)
                for i, n in enumerate((12, 20, 30))
            )
            assert stats_distance(a, b) == stats_distance(b, a)
            assert stats_distance(a, c) <= stats_distance(a, b) + stats_distance(b, c) + 1e-12
