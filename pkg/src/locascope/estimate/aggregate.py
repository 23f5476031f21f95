"""Census-weighted aggregation of per-component values."""

import math
from collections.abc import Sequence

from ..graphs.base import LocascopeError
from ..solvers.spectral import StepFunction

_TOLERANCE = 1e-9


class WeightsNotNormalized(LocascopeError, ValueError):
    """Raised when aggregation weights are negative or do not sum to 1."""


def aggregate(
    weighted: Sequence[tuple[float, float | StepFunction]],
) -> float | StepFunction:
    """``Σ w_i value_i``; step functions are mixed pointwise.

    Summation follows the given order, so callers fix the order for bitwise
    reproducibility.
    """
    weights = [float(w) for w, _ in weighted]
    total = math.fsum(weights)
    if any(w < 0 for w in weights) or abs(total - 1.0) > _TOLERANCE:
        raise WeightsNotNormalized(
            f"Aggregation weights must be non-negative and sum to 1 (sum={total})",
            {"sum": total},
        )
    values = [value for _, value in weighted]
    if values and all(isinstance(value, StepFunction) for value in values):
        return StepFunction.mixture(list(zip(weights, values, strict=True)))  # type: ignore[arg-type]
    if any(isinstance(value, StepFunction) for value in values):
        raise LocascopeError("Cannot aggregate step functions together with scalars")
    return math.fsum(w * float(value) for w, value in zip(weights, values, strict=True))  # type: ignore[arg-type]
