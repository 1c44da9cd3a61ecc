import random

import networkx as nx
import pytest

from alliancepoly.compare import (
    CompareReport,
    are_isomorphic_small,
    compare_graphs,
    compare_polynomials,
    scan_corpus,
)
from alliancepoly.corpus import CorpusEntry, all_graphs, random_relabel
from alliancepoly.enumeration import EnumConfig, defensive_alliance_polynomial
from alliancepoly.errors import DomainError, InvariantError
from alliancepoly.graph import complete_graph, cycle_graph, disjoint_union, path_graph
from tests.conftest import to_networkx


def test_isomorphism_basics():
    assert are_isomorphic_small(cycle_graph(5), cycle_graph(5).relabel([2, 4, 1, 0, 3]))
    assert not are_isomorphic_small(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3)))
    assert not are_isomorphic_small(path_graph(4), path_graph(5))
    with pytest.raises(DomainError):
        are_isomorphic_small(complete_graph(11), complete_graph(11))
    assert are_isomorphic_small(complete_graph(11), complete_graph(11), limit=11)


@pytest.mark.slow
def test_isomorphism_agrees_with_networkx():
    graphs = all_graphs(5)
    for g in graphs:
        for h in graphs:
            expected = nx.is_isomorphic(to_networkx(g), to_networkx(h))
            assert are_isomorphic_small(g, h) == expected, (g.label, h.label)


def test_relabeled_pairs_are_isomorphic(random_graphs):
    rng = random.Random(9)
    for g in random_graphs(50, 5, 10, seed=13):
        h = random_relabel(g, rng)
        assert are_isomorphic_small(g, h)
        report = compare_graphs(g, h)
        assert report.da_equal and report.isomorphic


def test_named_pairs_share_alliance_polynomial_only(named):
    for left, right in (("G1", "G2"), ("G3", "G4")):
        report = compare_graphs(named[left], named[right])
        assert report.A_equal
        assert not report.da_equal
        assert report.isomorphic is False
        assert (report.left, report.right) == (left, right)


def test_compare_document():
    report = compare_graphs(path_graph(4), path_graph(4).relabel([3, 2, 1, 0]))
    doc = report.to_dict()
    assert doc["da_equal"] and doc["A_equal"] and doc["q_equal"] and doc["a_equal"]
    assert doc["isomorphic"] is True
    assert set(doc) == {"a", "b", "da_equal", "A_equal", "q_equal", "a_equal", "isomorphic"}


def test_isomorphism_skipped_above_limit():
    report = compare_graphs(path_graph(12), path_graph(12), iso_limit=10)
    assert report.isomorphic is None
    assert "n/a" in report.to_text()


def test_compare_polynomials_without_graphs():
    k1 = defensive_alliance_polynomial(complete_graph(1))
    p2 = defensive_alliance_polynomial(path_graph(2))
    report = compare_polynomials(k1, 1, p2, 2)
    assert not report.da_equal
    assert not report.a_equal


def test_report_rejects_inconsistent_results():
    with pytest.raises(InvariantError):
        CompareReport(da_equal=False, A_equal=True, q_equal=True, a_equal=True, isomorphic=True)
    with pytest.raises(InvariantError):
        CompareReport(da_equal=True, A_equal=False, q_equal=True, a_equal=True)


def _entries(graphs):
    return [CorpusEntry(g.label, g) for g in graphs]


def test_scan_by_da_finds_only_isomorphic_pairs(named):
    graphs = [named["G1"], named["G2"], named["G1"].relabel([7, 6, 5, 4, 3, 2, 1, 0])]
    graphs[2] = graphs[2].with_label("G1r")
    report = scan_corpus(_entries(graphs), key="da")
    assert report.scanned == 3
    assert len(report.buckets) == 2
    assert [(p.left, p.right) for p in report.pairs] == [("G1", "G1r")]
    assert report.unresolved == []


def test_scan_by_alliance_polynomial(named):
    report = scan_corpus(_entries(named.values()), key="A")
    assert [(p.left, p.right) for p in report.pairs] == [("G1", "G2"), ("G3", "G4")]
    assert len(report.split_by_da) == 2
    doc = report.to_dict()
    assert doc["key"] == "A"
    assert all(pair["key_equal"] and not pair["da_equal"] for pair in doc["split_pairs"])
    assert "split by da: 2" in report.to_text()


def test_scan_of_small_atlas_settles_every_shared_pair():
    entries = [CorpusEntry(g.label, g) for order in range(1, 6) for g in all_graphs(order)]
    report = scan_corpus(entries, key="da")
    assert report.scanned == 52
    for pair in report.pairs:
        assert pair.da_equal
        assert pair.isomorphic is not None


def test_scan_skips_bad_entries_and_guard_trips():
    entries = [
        CorpusEntry("k3", complete_graph(3)),
        CorpusEntry("k6", complete_graph(6)),
        CorpusEntry("bad", error="invalid graph6 character"),
    ]
    report = scan_corpus(entries, key="q", cfg=EnumConfig(max_subgraphs=10))
    assert report.scanned == 2
    assert [b.members for b in report.buckets] == [["k3"]]
    assert [s["source"] for s in report.skipped] == ["bad", "k6"]
    assert "limit 10" in report.skipped[1]["reason"]


def test_scan_keys():
    entries = [CorpusEntry("c4", cycle_graph(4)), CorpusEntry("p4", path_graph(4))]
    report = scan_corpus(entries, key="a")
    assert all(bucket.key.startswith("n=4: ") for bucket in report.buckets)
    with pytest.raises(DomainError):
        scan_corpus(entries, key="tutte")


def test_parallel_scan_matches_serial(named):
    serial = scan_corpus(_entries(named.values()), key="A")
    parallel = scan_corpus(
        _entries(named.values()), key="A", cfg=EnumConfig(parallel=True, workers=2)
    )
    assert parallel.to_dict() == serial.to_dict()


def test_scan_keeps_entries_with_repeated_sources():
    entries = [
        CorpusEntry("dup", cycle_graph(4)),
        CorpusEntry("dup", path_graph(4)),
        CorpusEntry("dup", cycle_graph(4).relabel([1, 3, 0, 2])),
    ]
    report = scan_corpus(entries, key="q")
    assert report.scanned == 3
    assert [b.members for b in report.buckets] == [["dup", "dup"], ["dup"]]
    assert len(report.pairs) == 1
    assert report.pairs[0].da_equal and report.pairs[0].isomorphic
