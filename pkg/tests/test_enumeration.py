import pickle
import random

import pytest

from alliancepoly.corpus import all_labeled_graphs, random_relabel
from alliancepoly.enumeration import (
    GUARD_ENV_VAR,
    EnumConfig,
    alliance_polynomial_direct,
    alliance_value,
    compute_da,
    defensive_alliance_polynomial,
    defensive_k_alliance_polynomial,
    enumerate_connected_subsets,
    is_defensive_alliance,
    is_defensive_k_alliance,
    is_strong_defensive_alliance,
    naive_connected_subsets,
    naive_defensive_alliance_polynomial,
)
from alliancepoly.errors import ConfigError, DomainError, GuardExceededError
from alliancepoly.families import FamilySpec, make_family
from alliancepoly.families.base import complete_poly
from alliancepoly.graph import VertexSubset, complete_graph, empty_graph, path_graph
from alliancepoly.poly import UniPoly
from tests.conftest import poly_of

G1_DA = poly_of(
    (8, 10, 1), (7, 9, 2), (7, 8, 6), (6, 9, 1), (6, 8, 14), (6, 7, 7),
    (5, 9, 2), (5, 8, 10), (5, 7, 16), (4, 9, 2), (4, 8, 4), (4, 7, 17),
    (3, 8, 2), (3, 7, 14), (2, 8, 1), (2, 7, 9), (1, 6, 4), (1, 5, 4),
)  # fmt: skip
G2_DA = poly_of(
    (8, 10, 1), (7, 9, 3), (7, 8, 5), (6, 9, 1), (6, 8, 15), (6, 7, 7),
    (5, 9, 1), (5, 8, 11), (5, 7, 15), (4, 9, 2), (4, 8, 2), (4, 7, 19),
    (3, 8, 3), (3, 7, 13), (2, 8, 1), (2, 7, 9), (1, 6, 4), (1, 5, 4),
)  # fmt: skip
G3_DA = poly_of(
    (8, 9, 1), (7, 9, 3), (7, 8, 2), (6, 8, 9), (6, 7, 1), (5, 9, 1),
    (5, 8, 7), (5, 7, 3), (5, 6, 1), (4, 9, 2), (4, 8, 3), (4, 7, 5),
    (4, 6, 2), (3, 9, 1), (3, 8, 4), (3, 7, 5), (3, 6, 1), (2, 8, 1),
    (2, 7, 4), (2, 6, 4), (1, 7, 2), (1, 6, 3), (1, 5, 2), (1, 4, 1),
)  # fmt: skip
G4_DA = poly_of(
    (8, 9, 1), (7, 9, 3), (7, 8, 2), (6, 9, 2), (6, 8, 7), (6, 7, 1),
    (5, 9, 1), (5, 8, 7), (5, 7, 3), (5, 6, 1), (4, 8, 5), (4, 7, 5),
    (4, 6, 2), (3, 9, 1), (3, 8, 4), (3, 7, 5), (3, 6, 1), (2, 8, 1),
    (2, 7, 4), (2, 6, 4), (1, 7, 2), (1, 6, 3), (1, 5, 2), (1, 4, 1),
)  # fmt: skip

GOLDEN = {"G1": G1_DA, "G2": G2_DA, "G3": G3_DA, "G4": G4_DA}


def test_alliance_value():
    k2 = complete_graph(2)
    assert alliance_value(k2, 0b01) == 1
    assert alliance_value(k2, VertexSubset(0b11, 2)) == 3
    assert alliance_value(complete_graph(3), 0b111) == 5
    # Independent of connectivity: the two ends of P3 each have one neighbor outside.
    assert alliance_value(path_graph(3), 0b101) == 2
    with pytest.raises(DomainError):
        alliance_value(k2, 0)


def test_alliance_predicates():
    star = make_family(FamilySpec.parse("star:3"))  # leaves 0..2, center 3
    assert alliance_value(star, 0b1000) == 1
    assert is_defensive_alliance(star, 0b0001)
    assert not is_strong_defensive_alliance(star, 0b0001)
    assert is_strong_defensive_alliance(star, 0b1111)
    assert not is_defensive_alliance(star, 0b1000)
    assert is_defensive_k_alliance(star, 0b1111, 1)
    assert not is_defensive_k_alliance(star, 0b1111, 2)
    with pytest.raises(DomainError):
        is_defensive_k_alliance(star, 0b1111, 4)


def test_small_complete_graphs():
    assert defensive_alliance_polynomial(complete_graph(1)) == poly_of((1, 1, 1))
    assert defensive_alliance_polynomial(complete_graph(2)) == poly_of((1, 1, 2), (2, 3, 1))
    assert defensive_alliance_polynomial(complete_graph(3)) == poly_of(
        (1, 1, 3), (2, 3, 3), (3, 5, 1)
    )


def test_edgeless_graph():
    assert defensive_alliance_polynomial(empty_graph(4)) == poly_of((1, 4, 4))


@pytest.mark.parametrize("name", ["G1", "G2", "G3", "G4"])
def test_named_graph_polynomials(named, name):
    result = compute_da(named[name])
    assert result.poly == GOLDEN[name]
    assert result.visited == GOLDEN[name].evaluate(1, 1)


def test_enumeration_visits_each_connected_subset_once(named):
    g = named["G3"]
    seen = []
    count = enumerate_connected_subsets(g, lambda s, value: seen.append((s.mask, value)))
    assert count == len(seen)
    assert sorted(seen) == sorted(naive_connected_subsets(g))


@pytest.mark.slow
@pytest.mark.parametrize("order", [1, 2, 3, 4, 5])
def test_agrees_with_brute_force_on_labeled_graphs(order):
    for g in all_labeled_graphs(order):
        assert defensive_alliance_polynomial(g) == naive_defensive_alliance_polynomial(g), g.label


def test_incremental_values_on_random_graphs(random_graphs):
    cfg = EnumConfig(debug_check=True)
    for g in random_graphs(100, 6, 10):
        assert compute_da(g, cfg).poly == naive_defensive_alliance_polynomial(g), g.label


def test_relabeling_keeps_polynomial(random_graphs):
    rng = random.Random(3)
    for g in random_graphs(30, 5, 9, seed=11):
        h = random_relabel(g, rng)
        assert defensive_alliance_polynomial(h) == defensive_alliance_polynomial(g)


@pytest.mark.slow
def test_complete_graph_of_order_18():
    result = compute_da(complete_graph(18))
    assert result.visited == 2**18 - 1
    assert result.poly == complete_poly(18)


def test_guard_trips():
    with pytest.raises(GuardExceededError) as excinfo:
        compute_da(complete_graph(4), EnumConfig(max_subgraphs=5))
    assert excinfo.value.limit == 5
    assert excinfo.value.visited == 5
    assert excinfo.value.exit_code == 3


def test_guard_is_inclusive():
    assert compute_da(complete_graph(3), EnumConfig(max_subgraphs=7)).visited == 7
    with pytest.raises(GuardExceededError):
        compute_da(complete_graph(3), EnumConfig(max_subgraphs=6))


def test_guard_error_pickles():
    error = pickle.loads(pickle.dumps(GuardExceededError(10, 15)))
    assert (error.limit, error.visited) == (10, 15)
    assert "limit 10" in str(error)


def test_parallel_matches_serial(named):
    cfg = EnumConfig(parallel=True, workers=2)
    for name in ("G1", "G4"):
        result = compute_da(named[name], cfg)
        assert result.poly == GOLDEN[name]
        assert result.visited == GOLDEN[name].evaluate(1, 1)


def test_parallel_guard_counts_all_roots():
    with pytest.raises(GuardExceededError) as excinfo:
        compute_da(complete_graph(4), EnumConfig(max_subgraphs=10, parallel=True, workers=2))
    assert excinfo.value.visited == 15


def test_direct_alliance_polynomial(named):
    assert alliance_polynomial_direct(named["G1"]) == UniPoly(
        "y", {5: 4, 6: 4, 7: 63, 8: 37, 9: 7, 10: 1}
    )


def test_k_alliance_polynomial():
    k4 = complete_graph(4)
    assert defensive_k_alliance_polynomial(k4, 3) == UniPoly("x", {4: 1})
    assert defensive_k_alliance_polynomial(k4, -3) == UniPoly("x", {1: 4, 2: 6, 3: 4, 4: 1})
    with pytest.raises(DomainError):
        defensive_k_alliance_polynomial(k4, 4)


def test_config_from_env():
    assert EnumConfig.from_env({}) == EnumConfig()
    assert EnumConfig.from_env({GUARD_ENV_VAR: "100"}).max_subgraphs == 100
    assert EnumConfig.from_env({GUARD_ENV_VAR: "  "}) == EnumConfig()
    cfg = EnumConfig.from_env({GUARD_ENV_VAR: "100"}, max_subgraphs=None, parallel=True)
    assert (cfg.max_subgraphs, cfg.parallel) == (100, True)
    assert EnumConfig.from_env({GUARD_ENV_VAR: "100"}, max_subgraphs=7).max_subgraphs == 7


@pytest.mark.parametrize("raw", ["abc", "0", "-5", "1.5"])
def test_config_from_env_rejects(raw):
    with pytest.raises(ConfigError):
        EnumConfig.from_env({GUARD_ENV_VAR: raw})


def test_config_rejects_bad_workers():
    with pytest.raises(ConfigError):
        EnumConfig(workers=0)
