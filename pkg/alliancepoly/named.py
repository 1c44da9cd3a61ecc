"""The two pairs of order-8 graphs that share an alliance polynomial but not ``da``."""

from .errors import FamilySpecError
from .graph import Graph, graph_from_edge_list

NAMED_ORDER = 8

NAMED_EDGES: dict[str, list[tuple[int, int]]] = {
    "G1": [(0, 1), (1, 3), (3, 2), (2, 0), (0, 4), (4, 6), (6, 5), (5, 7), (7, 4), (5, 1)],
    "G2": [(0, 1), (1, 3), (3, 2), (2, 0), (0, 4), (4, 5), (5, 1), (5, 6), (6, 7), (7, 3)],
    "G3": [(0, 1), (1, 2), (2, 0), (1, 3), (1, 4), (0, 5), (5, 6), (6, 7), (7, 5)],
    "G4": [(0, 1), (1, 2), (2, 0), (5, 3), (5, 4), (1, 5), (0, 6), (6, 7), (7, 0)],
}


def named_graph(name: str) -> Graph:
    """Return G1, G2, G3 or G4 (case-insensitive)."""
    key = name.strip().upper()
    edges = NAMED_EDGES.get(key)
    if edges is None:
        raise FamilySpecError(
            f"unknown named graph {name!r} (known: {', '.join(NAMED_EDGES)})"
        )
    return graph_from_edge_list(NAMED_ORDER, edges, label=key)
