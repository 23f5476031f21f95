"""Seeded counter-based random streams."""

import numpy as np

from ..graphs.base import InvalidParameter


def counter_rng(seed: int) -> np.random.Generator:
    """Philox stream keyed by ``seed``: draw ``i`` depends only on ``(seed, i)``."""
    if seed < 0:
        raise InvalidParameter(f"seed must be non-negative, got {seed}", {"seed": seed})
    return np.random.Generator(np.random.Philox(key=seed))
