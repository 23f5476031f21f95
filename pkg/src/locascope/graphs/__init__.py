"""Graph representation, balls, canonical codes and local statistics."""

from .balls import RootedBall, ball
from .base import (
    DegreeBoundExceeded,
    Graph,
    InvalidEdge,
    InvalidParameter,
    LocascopeError,
    NotConnected,
    VertexSetMismatch,
    build_graph,
    edge_distance,
)
from .canon import BallCode, ComponentCode, canonical_component_code, canonical_rooted_code
from .fileio import GraphParseError, format_graph, parse_graph, read_graph, write_graph
from .stats import (
    NeighborhoodDistribution,
    RadiusMismatch,
    ball_codes,
    neighborhood_distribution,
    stats_distance,
)

__all__ = [
    "Graph",
    "RootedBall",
    "BallCode",
    "ComponentCode",
    "NeighborhoodDistribution",
    "LocascopeError",
    "InvalidEdge",
    "InvalidParameter",
    "DegreeBoundExceeded",
    "NotConnected",
    "VertexSetMismatch",
    "RadiusMismatch",
    "GraphParseError",
    "build_graph",
    "ball",
    "ball_codes",
    "canonical_rooted_code",
    "canonical_component_code",
    "neighborhood_distribution",
    "stats_distance",
    "edge_distance",
    "parse_graph",
    "format_graph",
    "read_graph",
    "write_graph",
]
