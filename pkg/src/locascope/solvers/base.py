"""Shared pieces of the exact kernels: size caps, count polynomials, bipartition."""

import math
from collections import deque
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any

from ..graphs.base import Graph, InvalidParameter, LocascopeError


class ComponentTooLarge(LocascopeError, ValueError):
    """Raised when an exponential-time kernel is handed a component above its cap."""

    def __init__(self, kernel: str, size: int, cap: int):
        super().__init__(
            f"{kernel} needs components of at most {cap} vertices, got {size}; "
            "raise delta (smaller pieces) or raise the cap",
            {"kernel": kernel, "size": size, "cap": cap},
        )
        self.size = size
        self.cap = cap


def require_size(graph: Graph, cap: int, kernel: str) -> None:
    if graph.n > cap:
        raise ComponentTooLarge(kernel, graph.n, cap)


@dataclass(frozen=True, slots=True)
class CountPolynomial:
    """Exact generating polynomial ``sum_k c_k λ^k``; ``coefficients[k] = c_k``."""

    coefficients: tuple[int, ...]

    @classmethod
    def one(cls) -> "CountPolynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __add__(self, other: "CountPolynomial") -> "CountPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        left = self.coefficients + (0,) * (size - len(self.coefficients))
        right = other.coefficients + (0,) * (size - len(other.coefficients))
        return CountPolynomial(tuple(a + b for a, b in zip(left, right, strict=True)))

    def __mul__(self, other: "CountPolynomial") -> "CountPolynomial":
        terms = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    terms[i + j] += a * b
        return CountPolynomial(tuple(terms))

    def shifted(self) -> "CountPolynomial":
        """Multiply by λ."""
        return CountPolynomial((0,) + self.coefficients)

    def to_list(self) -> list[int]:
        return list(self.coefficients)


def product(polynomials: Sequence[CountPolynomial]) -> CountPolynomial:
    result = CountPolynomial.one()
    for polynomial in polynomials:
        result = result * polynomial
    return result


def eval_log_partition(polynomial: CountPolynomial, lam: float) -> float:
    """``log sum_k c_k λ^k`` with the largest term factored out."""
    if lam <= 0:
        raise InvalidParameter(f"lambda must be positive, got {lam}", {"lambda": lam})
    log_lam = math.log(lam)
    terms = [math.log(c) + k * log_lam for k, c in enumerate(polynomial.coefficients) if c > 0]
    if not terms:
        raise InvalidParameter("polynomial has no positive coefficient")
    top = max(terms)
    return top + math.log(math.fsum(math.exp(t - top) for t in terms))


def two_coloring(graph: Graph) -> list[int] | None:
    """A proper 2-colouring (0/1 per vertex) or ``None`` if an odd cycle exists."""
    color = [-1] * graph.n
    for start in range(graph.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in graph.adjacency[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def split_components(graph: Graph, keep: Sequence[int]) -> list[Graph]:
    """Connected pieces of the subgraph induced on ``keep``."""
    sub, _ = graph.induced_subgraph(sorted(keep))
    return [sub.induced_subgraph(members)[0] for members in sub.connected_components()]


def memoized_over_components(
    graph: Graph,
    solve_connected: Callable[[Graph, dict[Any, CountPolynomial]], CountPolynomial],
    memo: dict[Any, CountPolynomial],
) -> CountPolynomial:
    """Product of ``solve_connected`` over the components of ``graph``."""
    return product(
        [solve_connected(part, memo) for part in split_components(graph, range(graph.n))]
    )
