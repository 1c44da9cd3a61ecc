"""alliancepoly - Defensive alliance polynomials of graphs."""

from ._version import __version__
from .enumeration import EnumConfig, compute_da, defensive_alliance_polynomial
from .errors import AlliancePolyError
from .graph import Graph, graph_from_edge_list, parse_graph6
from .poly import BiPoly, UniPoly

__all__ = [
    "__version__",
    "AlliancePolyError",
    "BiPoly",
    "EnumConfig",
    "Graph",
    "UniPoly",
    "compute_da",
    "defensive_alliance_polynomial",
    "graph_from_edge_list",
    "parse_graph6",
]
