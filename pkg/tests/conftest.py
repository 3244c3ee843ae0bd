import importlib
import random

import pytest

from edgeideal.graph import Graph

# The package re-exports the regularity() function under the module's name.
regularity_module = importlib.import_module("edgeideal.regularity")


@pytest.fixture(autouse=True)
def check_boundaries(monkeypatch):
    # Every complex built while the suite runs is checked for d o d == 0.
    monkeypatch.setattr(regularity_module, "CHECK_BOUNDARIES", True)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240601)
