"""Local neighbourhood statistics: the distribution of rooted ball classes."""

import logging
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .balls import NeighborOracle, ball
from .base import Graph, LocascopeError
from .canon import BallCode, canonical_rooted_code

logger = logging.getLogger(__name__)

Frequency = Fraction | float


class RadiusMismatch(LocascopeError, ValueError):
    """Raised when two statistics objects were taken at different radii."""


@dataclass(frozen=True)
class NeighborhoodDistribution:
    """Frequencies of ball classes for every radius ``s <= radius``.

    ``sample_size`` is ``None`` for exact statistics over all vertices.
    Frequencies are exact fractions when computed here and floats when read
    back from JSON.
    """

    radius: int
    frequencies: Mapping[int, Mapping[BallCode, Frequency]]
    sample_size: int | None = None

    @property
    def is_exact(self) -> bool:
        return self.sample_size is None

    def at(self, s: int) -> Mapping[BallCode, Frequency]:
        return self.frequencies.get(s, {})

    def frequency(self, code: BallCode) -> Frequency:
        return self.at(code.radius).get(code, 0)

    def to_dict(self) -> dict[str, Any]:
        return {
            "radius": self.radius,
            "sample_size": self.sample_size,
            "stats": {
                str(s): {code.hex(): float(freq) for code, freq in sorted(classes.items())}
                for s, classes in sorted(self.frequencies.items())
            },
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], degree_bound: int = 1) -> "NeighborhoodDistribution":
        frequencies = {
            int(s): {
                BallCode.from_hex(text, int(s), degree_bound): float(freq)
                for text, freq in classes.items()
            }
            for s, classes in data["stats"].items()
        }
        radius = int(data.get("radius", max(frequencies, default=0)))
        return cls(radius, frequencies, data.get("sample_size"))


def ball_codes(graph: NeighborOracle, v: int, r: int) -> tuple[BallCode, ...]:
    """Codes of the balls of radius ``0..r`` around ``v`` from one extraction."""
    outer = ball(graph, v, r)
    return tuple(canonical_rooted_code(outer.restrict(s)) for s in range(r + 1))


def distribution_from_counts(
    radius: int, counts: Mapping[int, Counter], total: int, sample_size: int | None
) -> NeighborhoodDistribution:
    frequencies = {
        s: {code: Fraction(count, total) for code, count in counts[s].items()}
        for s in range(radius + 1)
    }
    return NeighborhoodDistribution(radius, frequencies, sample_size)


def neighborhood_distribution(graph: Graph, r: int) -> NeighborhoodDistribution:
    """Exact ``p_G(α)`` for every class ``α`` of radius ``s <= r``."""
    if r < 0:
        raise LocascopeError(f"Radius must be non-negative, got {r}")
    counts: dict[int, Counter] = {s: Counter() for s in range(r + 1)}
    for v in range(graph.n):
        for s, code in enumerate(ball_codes(graph, v, r)):
            counts[s][code] += 1
    if graph.n == 0:
        return NeighborhoodDistribution(r, {s: {} for s in range(r + 1)}, None)
    logger.debug(
        f"Exact statistics at radius {r}: "
        + ", ".join(f"s={s}: {len(counts[s])} classes" for s in range(r + 1))
    )
    return distribution_from_counts(r, counts, graph.n, None)


def sup_over_classes(left: Mapping[Any, Frequency], right: Mapping[Any, Frequency]) -> float:
    """``max |left(c) - right(c)|`` over the union of keys, missing keys as 0."""
    worst: Frequency = 0
    for key in set(left) | set(right):
        gap = abs(left.get(key, 0) - right.get(key, 0))
        if gap > worst:
            worst = gap
    return float(worst)


def stats_distance(first: NeighborhoodDistribution, second: NeighborhoodDistribution) -> float:
    """Sup distance over all radii ``s <= r`` and all classes."""
    if first.radius != second.radius:
        raise RadiusMismatch(
            f"Distributions have radii {first.radius} and {second.radius}",
            {"left": first.radius, "right": second.radius},
        )
    return max(
        (sup_over_classes(first.at(s), second.at(s)) for s in range(first.radius + 1)),
        default=0.0,
    )
