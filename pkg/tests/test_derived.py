import pytest

from alliancepoly.derived import (
    alliance_polynomial,
    defensive_alliance_cardinality_polynomial,
    induced_connected_subgraph_polynomial,
    strong_alliance_polynomial,
)
from alliancepoly.enumeration import (
    alliance_polynomial_direct,
    defensive_alliance_polynomial,
    defensive_k_alliance_polynomial,
    strong_alliance_polynomial_direct,
)
from alliancepoly.errors import DomainError
from alliancepoly.graph import cycle_graph, path_graph
from alliancepoly.poly import UniPoly
from tests.test_enumeration import G1_DA, G2_DA, G3_DA, G4_DA


def test_alliance_polynomial_examples():
    expected = UniPoly("y", {5: 4, 6: 4, 7: 63, 8: 37, 9: 7, 10: 1})
    assert alliance_polynomial(G1_DA) == expected
    assert alliance_polynomial(G2_DA) == expected
    assert str(expected) == "4y^5 + 4y^6 + 63y^7 + 37y^8 + 7y^9 + y^10"
    other = UniPoly("y", {4: 1, 5: 2, 6: 11, 7: 20, 8: 26, 9: 8})
    assert alliance_polynomial(G3_DA) == other
    assert alliance_polynomial(G4_DA) == other


def test_induced_connected_subgraph_polynomial():
    assert induced_connected_subgraph_polynomial(G1_DA) == UniPoly(
        "x", {1: 8, 2: 10, 3: 16, 4: 23, 5: 28, 6: 22, 7: 8, 8: 1}
    )


def test_strong_alliance_polynomial_of_four_cycle():
    da = defensive_alliance_polynomial(cycle_graph(4))
    assert strong_alliance_polynomial(da, 4) == UniPoly("x", {2: 4, 3: 4, 4: 1})


def test_cardinality_polynomial_range():
    da = defensive_alliance_polynomial(path_graph(4))
    assert defensive_alliance_cardinality_polynomial(da, 4, -3) == UniPoly(
        "x", {1: 4, 2: 3, 3: 2, 4: 1}
    )
    assert defensive_alliance_cardinality_polynomial(da, 4, 1) == UniPoly("x", {4: 1})
    for k in (-4, 4):
        with pytest.raises(DomainError):
            defensive_alliance_cardinality_polynomial(da, 4, k)


def test_order_mismatch():
    da = defensive_alliance_polynomial(path_graph(4))
    with pytest.raises(DomainError):
        strong_alliance_polynomial(da, 5)


def test_identities_on_small_graphs(small_corpus):
    for g in small_corpus:
        da = defensive_alliance_polynomial(g)
        n = g.n
        assert alliance_polynomial(da) == alliance_polynomial_direct(g), g.label
        assert strong_alliance_polynomial(da, n) == strong_alliance_polynomial_direct(g), g.label
        assert induced_connected_subgraph_polynomial(da).evaluate(1) == da.evaluate(1, 1)
        for k in range(-g.max_degree, g.max_degree + 1):
            derived = defensive_alliance_cardinality_polynomial(da, n, k)
            assert derived == defensive_k_alliance_polynomial(g, k), (g.label, k)
