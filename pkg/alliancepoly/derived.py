"""Univariate polynomials derived from ``da``: ``A(G; y)``, ``a(G; x)`` and ``q(G; x)``."""

from .errors import DomainError
from .poly import BiPoly, UniPoly, slice_x, slice_y, substitute_x_one, substitute_y_one


def alliance_polynomial(da: BiPoly) -> UniPoly:
    """``A(G; y) = da(G; 1, y)``."""
    return substitute_x_one(da)


def induced_connected_subgraph_polynomial(da: BiPoly) -> UniPoly:
    """``q(G; x) = da(G; x, 1)``."""
    return substitute_y_one(da)


def _check_order(da: BiPoly, n: int) -> None:
    order = slice_x(da, 1).coefficient_sum()
    if order != n:
        raise DomainError(f"polynomial describes an order-{order} graph, not order {n}")


def defensive_alliance_cardinality_polynomial(da: BiPoly, n: int, k: int) -> UniPoly:
    """Connected defensive ``k``-alliances counted by cardinality.

    Sums the y-slices ``n + k .. 2n - 1`` of ``da``; no alliance value exceeds
    ``n + max_degree <= 2n - 1``.
    """
    _check_order(da, n)
    if not -(n - 1) <= k <= n - 1:
        raise DomainError(f"k must lie in {-(n - 1)}..{n - 1} for an order-{n} graph, got {k}")
    total = UniPoly("x")
    for exponent in range(n + k, 2 * n):
        total = total + slice_y(da, exponent)
    return total


def strong_alliance_polynomial(da: BiPoly, n: int) -> UniPoly:
    """``a(G; x) = sum over k = 0..n-1 of [y^(n+k)]da``."""
    return defensive_alliance_cardinality_polynomial(da, n, 0)
