"""Graph corpora: graph6 files, edge-list directories, the small-graph atlas and random graphs."""

import logging
import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import TextIO

import networkx as nx

from .errors import DomainError, GraphFormatError
from .graph import (
    Graph,
    encode_graph6,
    from_networkx,
    graph_from_edge_list,
    parse_edge_list,
    parse_graph6,
)

logger = logging.getLogger(__name__)

ATLAS_MAX_ORDER = 7
LABELED_MAX_ORDER = 5
ATLAS_PREFIX = "atlas:"
LABELED_PREFIX = "labeled:"


@dataclass
class CorpusEntry:
    """One corpus item: a parsed graph, or the reason it could not be read."""

    source: str
    graph: Graph | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.graph is not None


def read_graph6_file(path: str | Path) -> Iterator[CorpusEntry]:
    """Yield one entry per nonblank line; bad lines become error entries."""
    path = Path(path)
    with open(path, "r", encoding="ascii", errors="replace") as f:
        for line_no, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            source = f"{path.name}:{line_no}"
            try:
                yield CorpusEntry(source, parse_graph6(line, label=source))
            except GraphFormatError as e:
                logger.warning("Skipping %s: %s", source, e)
                yield CorpusEntry(source, error=str(e))


def read_edge_list_file(path: str | Path) -> Graph:
    path = Path(path)
    return parse_edge_list(path.read_text(encoding="utf-8"), label=path.name)


def read_edge_list_dir(path: str | Path) -> Iterator[CorpusEntry]:
    """Yield the edge-list files of a directory in name order, skipping hidden files."""
    for child in sorted(Path(path).iterdir()):
        if not child.is_file() or child.name.startswith("."):
            continue
        try:
            yield CorpusEntry(child.name, read_edge_list_file(child))
        except GraphFormatError as e:
            logger.warning("Skipping %s: %s", child.name, e)
            yield CorpusEntry(child.name, error=str(e))


@lru_cache(maxsize=1)
def _atlas() -> tuple[nx.Graph, ...]:
    return tuple(nx.graph_atlas_g())


def all_graphs(order: int) -> list[Graph]:
    """One graph per isomorphism class of the given order (1..7), in atlas order."""
    if not 1 <= order <= ATLAS_MAX_ORDER:
        raise DomainError(f"the graph atlas covers orders 1..{ATLAS_MAX_ORDER}, got {order}")
    graphs = []
    for index, atlas_graph in enumerate(_atlas()):
        if atlas_graph.number_of_nodes() == order:
            graphs.append(from_networkx(atlas_graph, label=f"atlas:{order}#{index}"))
    return graphs


def all_labeled_graphs(order: int) -> Iterator[Graph]:
    """Every graph on the vertex set ``0..order-1`` (one per edge subset)."""
    if not 1 <= order <= LABELED_MAX_ORDER:
        raise DomainError(f"labeled generation covers orders 1..{LABELED_MAX_ORDER}, got {order}")
    pairs = list(combinations(range(order), 2))
    for mask in range(1 << len(pairs)):
        edges = [pair for bit, pair in enumerate(pairs) if mask >> bit & 1]
        yield graph_from_edge_list(order, edges, label=f"labeled:{order}#{mask}")


def random_graph(order: int, p: float, rng: random.Random) -> Graph:
    """Erdős–Rényi ``G(order, p)``."""
    edges = [(u, v) for u, v in combinations(range(order), 2) if rng.random() < p]
    return graph_from_edge_list(order, edges)


def random_relabel(g: Graph, rng: random.Random) -> Graph:
    permutation = list(range(g.n))
    rng.shuffle(permutation)
    return g.relabel(permutation)


def _parse_atlas_spec(spec: str) -> range:
    raw = spec[len(ATLAS_PREFIX) :]
    low, sep, high = raw.partition("-")
    try:
        first = int(low)
        last = int(high) if sep else first
    except ValueError as e:
        raise GraphFormatError(
            f"atlas corpus must look like 'atlas:N' or 'atlas:A-B', got {spec!r}"
        ) from e
    if not 1 <= first <= last <= ATLAS_MAX_ORDER:
        raise GraphFormatError(f"atlas orders must satisfy 1 <= A <= B <= {ATLAS_MAX_ORDER}")
    return range(first, last + 1)


def random_corpus(count: int, order: int, p: float, seed: int = 0) -> Iterator[CorpusEntry]:
    """``count`` independent ``G(order, p)`` graphs from one seeded generator."""
    rng = random.Random(seed)
    for index in range(count):
        label = f"random:{order}#{index}"
        yield CorpusEntry(label, random_graph(order, p, rng).with_label(label))


def open_corpus(spec: str) -> Iterator[CorpusEntry]:
    """Entries of a corpus spec.

    ``spec`` is ``atlas:N`` or ``atlas:A-B`` (one graph per isomorphism class),
    ``labeled:N`` (every labeled graph), a directory of edge-list files or a graph6 file.
    """
    if spec.startswith(LABELED_PREFIX):
        try:
            order = int(spec[len(LABELED_PREFIX) :])
        except ValueError as e:
            raise GraphFormatError(
                f"labeled corpus must look like 'labeled:N', got {spec!r}"
            ) from e
        if not 1 <= order <= LABELED_MAX_ORDER:
            raise GraphFormatError(f"labeled corpus orders must be in 1..{LABELED_MAX_ORDER}")
        for g in all_labeled_graphs(order):
            yield CorpusEntry(g.label or "", g)
        return
    if spec.startswith(ATLAS_PREFIX):
        for order in _parse_atlas_spec(spec):
            for g in all_graphs(order):
                yield CorpusEntry(g.label or "", g)
        return
    path = Path(spec)
    if path.is_dir():
        yield from read_edge_list_dir(path)
    elif path.is_file():
        yield from read_graph6_file(path)
    else:
        raise GraphFormatError(f"corpus not found: {spec}")


def write_graph6(graphs: Iterable[Graph], out: TextIO) -> int:
    """Write one graph6 line per graph and return how many were written."""
    count = 0
    for g in graphs:
        out.write(encode_graph6(g) + "\n")
        count += 1
    return count
