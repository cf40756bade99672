"""
Pytest configuration and fixtures for the entire test suite.
"""
import os
import random
from typing import Callable, List

import networkx as nx
import pytest

# Keep runs independent of a developer's .env
os.environ.setdefault("ANNIHILATOR_THREADS", "1")
os.environ.setdefault("SHOW_PROGRESS", "false")

from annihilator.config import get_settings
from annihilator.domain.models import Graph
from annihilator.services.graph_service import graph_from_edges


@pytest.fixture(scope="function", autouse=True)
def reset_singletons():
    """Reset cached settings and service singletons before and after each test."""
    import annihilator.services.family_service as family_module
    import annihilator.services.scan_service as scan_module
    import annihilator.services.verification_service as verification_module

    def reset():
        get_settings.cache_clear()
        family_module._family_service_instance = None
        scan_module._scan_service_instance = None
        verification_module._verification_service_instance = None

    reset()
    yield
    reset()


@pytest.fixture
def to_networkx() -> Callable[[Graph], nx.Graph]:
    """Convert a Graph to a networkx graph on the same vertex indices."""
    def convert(g: Graph) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        return h
    return convert


@pytest.fixture
def k4() -> Graph:
    return graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def path5() -> Graph:
    return graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])


@pytest.fixture
def cycle5() -> Graph:
    return graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner)


@pytest.fixture
def random_graphs() -> List[Graph]:
    """Seeded random graphs of order 1..12 at several densities."""
    rng = random.Random(7)
    graphs = []
    for _ in range(120):
        n = rng.randint(1, 12)
        p = rng.choice([0.15, 0.3, 0.5, 0.75])
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        graphs.append(graph_from_edges(n, edges))
    return graphs
