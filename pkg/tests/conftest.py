"""Pytest configuration and fixtures for locascope tests."""

import itertools

import networkx as nx
import pytest

from locascope.generators import cycle, grid2d, path
from locascope.graphs import Graph, build_graph

from .oracles import from_networkx


@pytest.fixture
def triangle() -> Graph:
    return build_graph(3, [(0, 1), (1, 2), (0, 2)], 3)


@pytest.fixture
def path4() -> Graph:
    return path(4)


@pytest.fixture
def k4() -> Graph:
    return build_graph(4, list(itertools.combinations(range(4), 2)), 3)


@pytest.fixture
def c8() -> Graph:
    return cycle(8)


@pytest.fixture
def grid5() -> Graph:
    return grid2d(5, 5)


@pytest.fixture
def petersen() -> Graph:
    return from_networkx(nx.petersen_graph(), 3)


@pytest.fixture
def graph_file(tmp_path):
    """Write graph text to a temporary file and return its path."""
    def _write(text: str, name: str = "graph.txt"):
        target = tmp_path / name
        target.write_text(text, encoding="utf-8")
        return target
    return _write
