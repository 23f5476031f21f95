"""Compact string form of graph families.

Grammar::

    path:N | cycle:N | ladder:N | cube3d:N
    grid2d:AxB | grid2d:N | torus2d:AxB | triangular:AxB
    rrg:n=N,d=D,g=G[,seed=S][,bipartite=0|1]
    SPEC+SPEC+...            (disjoint union)

``random_regular_girth`` is accepted as a long name for ``rrg``.
"""

import re
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..graphs.base import LocascopeError

FamilyTag = Literal[
    "path",
    "cycle",
    "grid2d",
    "torus2d",
    "cube3d",
    "triangular",
    "ladder",
    "random_regular_girth",
    "disjoint_union",
]

_DIMENSIONS = re.compile(r"^(\d+)(?:x(\d+))?$")


class InfeasibleSpec(LocascopeError, ValueError):
    """Raised for family specifications that cannot be realized."""


class FamilySpec(BaseModel):
    """A member of a generated graph family."""

    model_config = ConfigDict(frozen=True)

    family: FamilyTag
    dims: tuple[int, ...] = ()
    d: int = Field(default=3, ge=1)
    g: int = Field(default=3, ge=3)
    seed: int = Field(default=0, ge=0)
    bipartite: bool | None = None
    parts: tuple["FamilySpec", ...] = ()

    @model_validator(mode="after")
    def _check_sizes(self) -> "FamilySpec":
        if self.family == "disjoint_union":
            if not self.parts:
                raise ValueError("disjoint_union needs at least one part")
            return self
        expected = 2 if self.family in ("grid2d", "torus2d", "triangular") else 1
        if len(self.dims) != expected:
            raise ValueError(f"{self.family} takes {expected} size parameter(s), got {len(self.dims)}")
        if any(size < 1 for size in self.dims):
            raise ValueError("sizes must be at least 1")
        if self.family == "cycle" and self.dims[0] < 3:
            raise ValueError("cycles need at least 3 vertices")
        if self.family == "torus2d" and min(self.dims) < 3:
            raise ValueError("torus sides must be at least 3")
        if self.family == "random_regular_girth":
            n = self.dims[0]
            if n * self.d % 2:
                raise ValueError(f"n*d must be even, got n={n}, d={self.d}")
            if self.d >= n:
                raise ValueError(f"degree {self.d} needs more than {n} vertices")
            if self.bipartite and n % 2:
                raise ValueError("a bipartite regular graph needs an even number of vertices")
        return self

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        text = text.strip()
        try:
            if "+" in text:
                parts = tuple(cls.parse(part) for part in text.split("+"))
                return cls(family="disjoint_union", parts=parts)
            tag, _, argument = text.partition(":")
            tag = tag.strip().lower()
            if tag in ("rrg", "random_regular_girth"):
                return cls._parse_rrg(argument)
            match = _DIMENSIONS.match(argument.strip().lower())
            if not match:
                raise InfeasibleSpec(f"Cannot read sizes '{argument}' in '{text}'", {"family": text})
            first = int(match.group(1))
            if tag in ("grid2d", "torus2d", "triangular"):
                second = int(match.group(2)) if match.group(2) else first
                return cls(family=tag, dims=(first, second))
            if match.group(2):
                raise InfeasibleSpec(f"{tag} takes a single size, got '{argument}'", {"family": text})
            return cls(family=tag, dims=(first,))
        except ValidationError as e:
            message = "; ".join(err["msg"] for err in e.errors())
            raise InfeasibleSpec(f"Invalid family '{text}': {message}", {"family": text}) from e

    @classmethod
    def _parse_rrg(cls, argument: str) -> "FamilySpec":
        fields: dict[str, str] = {}
        for item in argument.split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise InfeasibleSpec(f"Expected key=value in rrg spec, got '{item}'")
            fields[key.strip()] = value.strip()
        unknown = set(fields) - {"n", "d", "g", "seed", "bipartite"}
        if unknown:
            raise InfeasibleSpec(f"Unknown rrg fields: {', '.join(sorted(unknown))}")
        if "n" not in fields:
            raise InfeasibleSpec("rrg needs n=")
        try:
            bipartite = None if "bipartite" not in fields else fields["bipartite"] not in ("0", "false", "no")
            return cls(
                family="random_regular_girth",
                dims=(int(fields["n"]),),
                d=int(fields.get("d", 3)),
                g=int(fields.get("g", 3)),
                seed=int(fields.get("seed", 0)),
                bipartite=bipartite,
            )
        except ValueError as e:
            if isinstance(e, ValidationError):
                raise
            raise InfeasibleSpec(f"rrg fields must be integers: {e}") from e

    @property
    def label(self) -> str:
        if self.family == "disjoint_union":
            return "+".join(part.label for part in self.parts)
        if self.family == "random_regular_girth":
            label = f"rrg:n={self.dims[0]},d={self.d},g={self.g},seed={self.seed}"
            if self.bipartite is not None:
                label += f",bipartite={int(self.bipartite)}"
            return label
        return f"{self.family}:" + "x".join(str(size) for size in self.dims)
