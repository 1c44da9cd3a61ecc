"""Shared fixtures: small corpora, seeded random graphs and networkx conversion."""

import random

import networkx as nx
import pytest

from alliancepoly.corpus import all_graphs, random_graph
from alliancepoly.graph import Graph
from alliancepoly.named import named_graph
from alliancepoly.poly import BiPoly


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


def poly_of(*terms: tuple[int, int, int]) -> BiPoly:
    return BiPoly.from_terms(terms)


@pytest.fixture
def as_networkx():
    return to_networkx


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    """One graph per isomorphism class for orders 1..6."""
    return [g for order in range(1, 7) for g in all_graphs(order)]


@pytest.fixture
def random_graphs():
    """Factory for ``count`` seeded random graphs with orders in ``low..high``."""

    def make(count: int, low: int, high: int, seed: int = 7) -> list[Graph]:
        rng = random.Random(seed)
        graphs = []
        for index in range(count):
            order = rng.randint(low, high)
            p = rng.uniform(0.2, 0.8)
            graphs.append(random_graph(order, p, rng).with_label(f"random#{index}"))
        return graphs

    return make


@pytest.fixture(scope="session")
def named():
    return {name: named_graph(name) for name in ("G1", "G2", "G3", "G4")}
