"""Finitely-valued i.i.d. random potentials."""

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..graphs.base import InvalidParameter
from ..utils.rng import counter_rng


class InvalidPotential(InvalidParameter):
    """Raised for potential distributions that cannot be read."""


class PotentialSpec(BaseModel):
    """Distribution of ``X``: value ``values[i]`` with probability ``probabilities[i]``."""

    model_config = ConfigDict(frozen=True)

    values: tuple[float, ...] = Field(min_length=1)
    probabilities: tuple[float, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_distribution(self) -> "PotentialSpec":
        if len(self.values) != len(self.probabilities):
            raise ValueError("values and probabilities must have the same length")
        if any(p < 0 for p in self.probabilities):
            raise ValueError("probabilities must be non-negative")
        if abs(math.fsum(self.probabilities) - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {math.fsum(self.probabilities)}, not 1")
        return self

    @classmethod
    def uniform(cls, values: list[float]) -> "PotentialSpec":
        return cls(values=tuple(values), probabilities=tuple([1.0 / len(values)] * len(values)))

    @classmethod
    def parse(cls, text: str) -> "PotentialSpec":
        """``"0,1"`` (uniform), ``"0:0.25,1:0.75"`` (weighted) or ``"3"`` (constant)."""
        items = [item.strip() for item in text.split(",") if item.strip()]
        if not items:
            raise InvalidPotential("empty potential specification")
        try:
            if all(":" not in item for item in items):
                return cls.uniform([float(item) for item in items])
            pairs = [item.split(":", 1) for item in items]
            return cls(
                values=tuple(float(value) for value, _ in pairs),
                probabilities=tuple(float(prob) for _, prob in pairs),
            )
        except ValueError as e:
            raise InvalidPotential(f"Invalid potential '{text}': {e}", {"potential": text}) from e

    @property
    def label(self) -> str:
        return ",".join(f"{v:g}:{p:g}" for v, p in zip(self.values, self.probabilities, strict=True))

    @property
    def mean(self) -> float:
        return math.fsum(v * p for v, p in zip(self.values, self.probabilities, strict=True))


def sample_potential(spec: PotentialSpec, n: int, seed: int) -> tuple[float, ...]:
    """``n`` i.i.d. draws from ``spec``, reproducible for a given seed."""
    rng = counter_rng(seed)
    picks = rng.choice(len(spec.values), size=n, p=np.asarray(spec.probabilities))
    return tuple(spec.values[i] for i in picks)
