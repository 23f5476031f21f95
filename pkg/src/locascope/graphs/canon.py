"""Canonical codes for rooted balls and small connected components.

Both codes come out of one individualization-refinement search: colour
refinement seeded by an invariant colouring, then backtracking over the
vertices of the first non-singleton cell. Every leaf of the search is a
discrete colouring, i.e. a vertex order; the code is the smallest adjacency
encoding over all leaves. The search tree depends only on the isomorphism
class, so the minimum does too.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from ..config.settings import locascope_config
from .balls import RootedBall
from .base import Graph, NotConnected

logger = logging.getLogger(__name__)

Adjacency = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, slots=True, order=True)
class BallCode:
    """Canonical identifier of a rooted-isomorphism class of ``radius``-balls.

    Equality ignores ``degree_bound``: the same rooted ball seen in hosts with
    different declared bounds is the same class.
    """

    data: bytes
    radius: int
    degree_bound: int = field(default=1, compare=False)

    def hex(self) -> str:
        return self.data.hex()

    @classmethod
    def from_hex(cls, text: str, radius: int, degree_bound: int = 1) -> "BallCode":
        return cls(bytes.fromhex(text), radius, degree_bound)

    @property
    def size(self) -> int:
        """Number of vertices of the encoded ball."""
        return int.from_bytes(self.data[:4], "big")


@dataclass(frozen=True, slots=True, order=True)
class ComponentCode:
    """Canonical identifier of an unrooted connected graph."""

    data: bytes

    def hex(self) -> str:
        return self.data.hex()

    @classmethod
    def from_hex(cls, text: str) -> "ComponentCode":
        return cls(bytes.fromhex(text))

    @property
    def size(self) -> int:
        return int.from_bytes(self.data[:4], "big")


def _rank(values: list) -> list[int]:
    ranking = {value: rank for rank, value in enumerate(sorted(set(values)))}
    return [ranking[value] for value in values]


def _refine(adjacency: Adjacency, colors: list[int]) -> list[int]:
    """Colour refinement to the coarsest stable colouring finer than ``colors``.

    Colours are re-ranked each round; a signature starts with the old colour,
    so the relative order of existing cells is preserved.
    """
    colors = _rank(colors)
    classes = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in adjacency[v])))
            for v in range(len(adjacency))
        ]
        refined = _rank(signatures)
        refined_classes = max(refined, default=-1) + 1
        if refined_classes == classes:
            return refined
        colors, classes = refined, refined_classes


def _encode(adjacency: Adjacency, position: list[int]) -> bytes:
    n = len(position)
    order = [0] * n
    for v, p in enumerate(position):
        order[p] = v
    out = bytearray(n.to_bytes(4, "big"))
    for v in order:
        row = sorted(position[u] for u in adjacency[v])
        out += len(row).to_bytes(2, "big")
        for p in row:
            out += p.to_bytes(2, "big")
    return bytes(out)


def _search(adjacency: Adjacency, colors: list[int]) -> bytes:
    colors = _refine(adjacency, colors)
    sizes = Counter(colors)
    if len(sizes) == len(colors):
        return _encode(adjacency, colors)
    target = min(color for color, count in sizes.items() if count > 1)
    best: bytes | None = None
    for v, color in enumerate(colors):
        if color != target:
            continue
        split = [
            2 * c + 1 if (c == target and u != v) else 2 * c
            for u, c in enumerate(colors)
        ]
        candidate = _search(adjacency, split)
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return best


@lru_cache(maxsize=locascope_config.canon_cache_size)
def canonical_form(adjacency: Adjacency, seed: tuple[int, ...]) -> bytes:
    """Canonical adjacency encoding of a vertex-coloured graph.

    ``seed`` must itself be an isomorphism invariant (degrees, distances from a
    root, ...). Memoized on the labelled input.
    """
    return _search(adjacency, list(seed))


def canonical_rooted_code(ball: RootedBall) -> BallCode:
    """Code invariant under root-preserving isomorphism of ``ball``.

    Seeding with (distance from root, degree) puts the root alone in the first
    cell, so it always lands at position 0 of the encoding.
    """
    adjacency = ball.graph.adjacency
    seed = tuple(_rank([(ball.distances[v], len(adjacency[v])) for v in range(ball.graph.n)]))
    data = canonical_form(adjacency, seed)
    return BallCode(data, ball.radius, ball.graph.degree_bound)


def canonical_component_code(component: Graph) -> ComponentCode:
    """Isomorphism-invariant code of a connected graph."""
    if not component.is_connected():
        raise NotConnected(
            "canonical_component_code needs a connected graph",
            {"vertices": component.n},
        )
    seed = tuple(len(nbrs) for nbrs in component.adjacency)
    return ComponentCode(canonical_form(component.adjacency, seed))
