"""Simple undirected graphs with bitmask adjacency, plus graph6 and edge-list codecs.

Vertices are the integers ``0..n-1``. Every vertex set (adjacency rows included) is an
``int`` bitmask where bit ``v`` marks vertex ``v``; the order is capped at 64 so a subset
always fits one machine word.
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

import networkx as nx

from .errors import GraphFormatError

MAX_ORDER = 64
GRAPH6_MAX_ORDER = 62
GRAPH6_HEADER = ">>graph6<<"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class VertexSubset:
    """Immutable subset of the vertices of an order-``n`` graph."""

    mask: int
    n: int

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSubset":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphFormatError(f"vertex {v} out of range 0..{n - 1}")
            mask |= 1 << v
        return cls(mask, n)

    @classmethod
    def full(cls, n: int) -> "VertexSubset":
        return cls((1 << n) - 1, n)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def complement(self) -> "VertexSubset":
        return VertexSubset(~self.mask & ((1 << self.n) - 1), self.n)

    def intersection_size(self, other: "VertexSubset | int") -> int:
        other_mask = other.mask if isinstance(other, VertexSubset) else other
        return (self.mask & other_mask).bit_count()

    def vertices(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __reduce__(self):
        return (VertexSubset, (self.mask, self.n))


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple undirected graph.

    ``adjacency[u]`` is the neighbor bitmask of ``u``. Build instances through
    :func:`graph_from_edge_list` or the other constructors in this module, which check
    symmetry and the absence of self-loops.
    """

    n: int
    adjacency: tuple[int, ...]
    label: str | None = field(default=None, compare=False)

    def __reduce__(self):
        # Frozen slotted instances are rebuilt through the constructor when pickled.
        return (Graph, (self.n, self.adjacency, self.label))

    def neighbors(self, u: int) -> VertexSubset:
        return VertexSubset(self.adjacency[u], self.n)

    def degree(self, u: int) -> int:
        return self.adjacency[u].bit_count()

    @property
    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def size(self) -> int:
        return sum(self.degrees) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree_sequence(self) -> list[int]:
        """Degrees sorted in non-increasing order."""
        return sorted(self.degrees, reverse=True)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        pairs = []
        for u in range(self.n):
            above = self.adjacency[u] >> (u + 1) << (u + 1)
            pairs.extend((u, v) for v in iter_bits(above))
        return pairs

    def with_label(self, label: str | None) -> "Graph":
        return Graph(self.n, self.adjacency, label)

    def component_of(self, v: int, within: int | None = None) -> int:
        """Bitmask of the component containing ``v`` in the subgraph induced by ``within``."""
        allowed = self.full_mask if within is None else within
        reached = 1 << v
        frontier = reached
        while frontier:
            grown = 0
            for u in iter_bits(frontier):
                grown |= self.adjacency[u]
            frontier = grown & allowed & ~reached
            reached |= frontier
        return reached

    def induces_connected(self, mask: int) -> bool:
        """Whether the nonempty vertex set ``mask`` induces a connected subgraph."""
        if not mask:
            return False
        start = (mask & -mask).bit_length() - 1
        return self.component_of(start, mask) == mask

    def is_connected(self) -> bool:
        return self.induces_connected(self.full_mask)

    def components(self, within: int | None = None) -> list[int]:
        """Component bitmasks of the subgraph induced by ``within`` (whole graph by default)."""
        remaining = self.full_mask if within is None else within
        result = []
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            component = self.component_of(start, remaining)
            result.append(component)
            remaining &= ~component
        return result

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``permutation[v]``."""
        if sorted(permutation) != list(range(self.n)):
            raise GraphFormatError("relabeling must be a permutation of 0..n-1")
        return graph_from_edge_list(
            self.n,
            [(permutation[u], permutation[v]) for u, v in self.edges()],
            label=self.label,
        )

    def to_edge_list_text(self) -> str:
        edges = self.edges()
        lines = [f"{self.n} {len(edges)}"]
        lines.extend(f"{u} {v}" for u, v in edges)
        return "\n".join(lines) + "\n"

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise GraphFormatError(f"graph order must be in 1..{MAX_ORDER}, got {n}")


def graph_from_edge_list(
    n: int, edges: Iterable[tuple[int, int]], label: str | None = None
) -> Graph:
    """Build a graph on ``n`` vertices; duplicate pairs collapse to one edge."""
    _check_order(n)
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), label)


def from_networkx(graph: nx.Graph, label: str | None = None) -> Graph:
    """Convert a networkx graph, numbering its nodes in iteration order."""
    index = {node: i for i, node in enumerate(graph.nodes)}
    edges = [(index[u], index[v]) for u, v in graph.edges()]
    return graph_from_edge_list(len(index), edges, label=label)


def empty_graph(n: int) -> Graph:
    return graph_from_edge_list(n, [])


def complete_graph(n: int) -> Graph:
    return graph_from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return graph_from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphFormatError(f"a cycle needs at least 3 vertices, got {n}")
    return graph_from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertex-disjoint union; ``h``'s vertices are shifted by ``g.n``."""
    _check_order(g.n + h.n)
    shift = g.n
    return Graph(g.n + h.n, g.adjacency + tuple(row << shift for row in h.adjacency))


def join(g: Graph, h: Graph) -> Graph:
    """Graph join ``g + h``: disjoint union plus every edge between the two vertex sets."""
    union = disjoint_union(g, h)
    g_mask = g.full_mask
    h_mask = h.full_mask << g.n
    rows = [row | h_mask if v < g.n else row | g_mask for v, row in enumerate(union.adjacency)]
    return Graph(union.n, tuple(rows))


def parse_edge_list(text: str, label: str | None = None) -> Graph:
    """Parse the edge-list text format: ``n m`` then ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphFormatError("edge list is empty")
    try:
        header = [int(tok) for tok in rows[0]]
        pairs = [tuple(int(tok) for tok in row) for row in rows[1:]]
    except ValueError as e:
        raise GraphFormatError(f"edge list contains a non-integer token: {e}") from e
    if len(header) != 2:
        raise GraphFormatError("edge list header must be 'n m'")
    n, m = header
    if len(pairs) != m:
        raise GraphFormatError(f"edge list header announces {m} edges, found {len(pairs)}")
    for pair in pairs:
        if len(pair) != 2:
            raise GraphFormatError(f"edge line must hold two vertices, got {list(pair)}")
    return graph_from_edge_list(n, pairs, label=label)  # type: ignore[arg-type]


def parse_graph6(line: str, label: str | None = None) -> Graph:
    """Decode a short-form graph6 line (order 1..62)."""
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER) :]
    if not text:
        raise GraphFormatError("empty graph6 line")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
    if text[0] == "~":
        raise GraphFormatError(f"graph6 orders above {GRAPH6_MAX_ORDER} are not supported")
    n = ord(text[0]) - 63
    if n == 0:
        raise GraphFormatError("graph6 line encodes the empty graph")

    try:
        decoded = nx.from_graph6_bytes(text.encode("ascii"))
    except nx.NetworkXError as e:
        raise GraphFormatError(f"malformed graph6 line: {e}") from e

    # networkx ignores the unused low bits of the last byte.
    pair_count = n * (n - 1) // 2
    padding = -pair_count % 6
    if padding and (ord(text[-1]) - 63) & ((1 << padding) - 1):
        raise GraphFormatError("graph6 padding bits are not zero")
    return from_networkx(decoded, label=label)


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a short-form graph6 line (no header, no newline)."""
    if g.n > GRAPH6_MAX_ORDER:
        raise GraphFormatError(f"graph6 orders above {GRAPH6_MAX_ORDER} are not supported")
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").rstrip("\n")
