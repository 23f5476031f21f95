"""Census of component isomorphism classes: the vertex fractions ``c_H``."""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..graphs.base import Graph
from ..graphs.canon import ComponentCode, canonical_component_code
from ..graphs.stats import sup_over_classes
from ..utils.parallel import ordered_map
from .hyperfinite import Decomposition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Census:
    """Vertices per component class, plus one representative graph per class."""

    total: int
    vertices: dict[ComponentCode, int]
    multiplicities: dict[ComponentCode, int]
    representatives: dict[ComponentCode, Graph]

    def classes(self) -> list[ComponentCode]:
        return sorted(self.vertices)

    def fraction(self, code: ComponentCode) -> Fraction:
        return Fraction(self.vertices.get(code, 0), self.total)

    def fractions(self) -> dict[ComponentCode, Fraction]:
        return {code: self.fraction(code) for code in self.classes()}

    def to_dict(self) -> dict[str, float]:
        return {code.hex(): float(self.fraction(code)) for code in self.classes()}


def component_census(decomposition: Decomposition, threads: int | None = None) -> Census:
    """Group components by isomorphism class and count their vertices."""
    codes = ordered_map(
        lambda component: canonical_component_code(component.graph),
        decomposition.components,
        threads,
    )
    vertices: Counter = Counter()
    multiplicities: Counter = Counter()
    representatives: dict[ComponentCode, Graph] = {}
    for code, component in zip(codes, decomposition.components, strict=True):
        vertices[code] += component.size
        multiplicities[code] += 1
        representatives.setdefault(code, component.graph)
    logger.debug(f"Census: {len(vertices)} classes over {decomposition.n} vertices")
    return Census(
        total=decomposition.n,
        vertices=dict(vertices),
        multiplicities=dict(multiplicities),
        representatives=representatives,
    )


def census_drift(first: Census, second: Census) -> float:
    """Largest change of any class fraction between two censuses."""
    return sup_over_classes(first.fractions(), second.fractions())
