"""Deterministic and seeded graph families."""

from .families import (
    LATTICE_DEGREE,
    FolnerElement,
    boundary_ratio,
    cube3d,
    cycle,
    folner_sequence,
    generate,
    grid2d,
    ladder,
    path,
    torus2d,
    triangular,
)
from .girth import girth, random_regular_girth
from .spec_parser import FamilySpec, InfeasibleSpec

__all__ = [
    "LATTICE_DEGREE",
    "FamilySpec",
    "FolnerElement",
    "InfeasibleSpec",
    "boundary_ratio",
    "cube3d",
    "cycle",
    "folner_sequence",
    "generate",
    "girth",
    "grid2d",
    "ladder",
    "path",
    "random_regular_girth",
    "torus2d",
    "triangular",
]
