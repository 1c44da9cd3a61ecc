"""Graph invariants read off a defensive alliance polynomial alone.

Nothing here sees the graph, so every extractor also serves as a sanity check for
polynomials loaded from JSON.
"""

from dataclasses import dataclass, field
from math import comb
from typing import Any

from .errors import DomainError
from .poly import BiPoly, coeff, slice_x, x_degree


def order_of(da: BiPoly) -> int:
    """``[x^1]da(G; x, 1)``."""
    order = slice_x(da, 1).coefficient_sum()
    if order == 0:
        raise DomainError("polynomial has no x^1 terms, so it is not the da of a graph")
    return order


def size_of(da: BiPoly) -> int:
    """``[x^2]da(G; x, 1)``: every edge is a connected pair."""
    return slice_x(da, 2).coefficient_sum()


def connected_k_subset_count(da: BiPoly, k: int) -> int:
    return slice_x(da, k).coefficient_sum()


def is_connected_poly(da: BiPoly) -> bool:
    return x_degree(da) == order_of(da)


def degree_sequence_of(da: BiPoly) -> list[int]:
    """Degrees in non-increasing order.

    A term ``c x y^b`` stands for ``c`` vertices of degree ``n - b``.
    """
    n = order_of(da)
    degrees = []
    for b, c in slice_x(da, 1).terms():
        if not 1 <= b <= n:
            raise DomainError(f"term x y^{b} implies degree {n - b} in an order-{n} graph")
        degrees.extend([n - b] * c)
    return sorted(degrees, reverse=True)


def cut_vertex_count(da: BiPoly) -> int:
    """``n - [x^(n-1)]da(G; x, 1)`` for a connected graph."""
    n = order_of(da)
    if not is_connected_poly(da):
        raise DomainError("cut vertices are only read off the polynomial of a connected graph")
    if n == 1:
        return 0
    return n - connected_k_subset_count(da, n - 1)


def max_component(da: BiPoly) -> tuple[int, int]:
    """``(c, count)``: the largest component order and how many components have it.

    A connected induced subgraph of order ``c`` can only be a whole component.
    """
    c = x_degree(da)
    return c, connected_k_subset_count(da, c)


def regular_degree(da: BiPoly) -> int | None:
    """``Δ`` when the graph is ``Δ``-regular (the x^1 slice is ``n y^(n-Δ)``), else None."""
    n = order_of(da)
    unit = list(slice_x(da, 1).terms())
    if len(unit) != 1:
        return None
    b, c = unit[0]
    return n - b if c == n else None


def regular_component_count(da: BiPoly, k: int) -> int:
    """Number of order-``k`` components of a regular graph: ``[x^k y^(Δ + n)]da``."""
    delta = regular_degree(da)
    if delta is None:
        raise DomainError("component counts by order need the polynomial of a regular graph")
    return coeff(da, k, delta + order_of(da))


def triangle_census(da: BiPoly) -> tuple[int, int, int]:
    """``(k3, s32, s33)``: connected triples, 2-paths and triangles, with ``k3 = s32 - 2 s33``."""
    k3 = connected_k_subset_count(da, 3)
    s32 = sum(comb(d, 2) for d in degree_sequence_of(da))
    excess = s32 - k3
    if excess < 0 or excess % 2:
        raise DomainError(
            f"{s32} two-paths and {k3} connected triples are inconsistent with any graph"
        )
    return k3, s32, excess // 2


def _alliance_count(da: BiPoly, threshold: int) -> int:
    return sum(c for _, b, c in da.terms() if b >= threshold)


@dataclass
class PropertyProfile:
    """Every invariant extracted from one polynomial."""

    order: int
    size: int
    connected: bool
    degrees: list[int]
    cut_vertices: int | None  # None for disconnected graphs
    max_component: tuple[int, int]
    k3: int
    s32: int
    s33: int
    regular: int | None = None
    regular_components: dict[int, int] = field(default_factory=dict)
    defensive_alliances: int = 0
    strong_alliances: int = 0

    def to_dict(self) -> dict[str, Any]:
        c, count = self.max_component
        regular = None
        if self.regular is not None:
            regular = {
                "degree": self.regular,
                "components": {str(k): v for k, v in sorted(self.regular_components.items())},
            }
        return {
            "order": self.order,
            "size": self.size,
            "connected": self.connected,
            "degrees": self.degrees,
            "cut_vertices": self.cut_vertices,
            "max_component": {"order": c, "count": count},
            "k3": self.k3,
            "s32": self.s32,
            "s33": self.s33,
            "regular": regular,
            "defensive_alliances": self.defensive_alliances,
            "strong_alliances": self.strong_alliances,
        }

    def to_text(self) -> str:
        c, count = self.max_component
        regular = "none" if self.regular is None else f"{self.regular}-regular"
        rows = [
            ("order", self.order),
            ("size", self.size),
            ("connected", "yes" if self.connected else "no"),
            ("degrees", " ".join(str(d) for d in self.degrees)),
            ("cut vertices", "n/a" if self.cut_vertices is None else self.cut_vertices),
            ("max component", f"order {c} x {count}"),
            ("k3 / s32 / s33", f"{self.k3} / {self.s32} / {self.s33}"),
            ("regular", regular),
            ("defensive alliances", self.defensive_alliances),
            ("strong alliances", self.strong_alliances),
        ]
        width = max(len(name) for name, _ in rows)
        return "\n".join(f"{name:<{width}}  {value}" for name, value in rows)


def profile(da: BiPoly) -> PropertyProfile:
    """Run every extractor on ``da``."""
    n = order_of(da)
    connected = is_connected_poly(da)
    k3, s32, s33 = triangle_census(da)
    delta = regular_degree(da)
    components: dict[int, int] = {}
    if delta is not None:
        for k in range(1, n + 1):
            count = coeff(da, k, delta + n)
            if count:
                components[k] = count
    return PropertyProfile(
        order=n,
        size=size_of(da),
        connected=connected,
        degrees=degree_sequence_of(da),
        cut_vertices=cut_vertex_count(da) if connected else None,
        max_component=max_component(da),
        k3=k3,
        s32=s32,
        s33=s33,
        regular=delta,
        regular_components=components,
        defensive_alliances=_alliance_count(da, n - 1),
        strong_alliances=_alliance_count(da, n),
    )

