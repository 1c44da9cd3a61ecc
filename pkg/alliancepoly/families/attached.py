"""A complete graph with one extra vertex attached to part of it."""

from math import comb

from ..graph import Graph, graph_from_edge_list
from ..poly import BiPoly, UniPoly, poly_add, poly_mul
from .base import BaseFamily, complete_poly, require
from .models import ErrataMode, Fingerprint, FingerprintKind

_X_Y = BiPoly.monomial(1, 1)
_Y = BiPoly.monomial(0, 1)


class AttachedCompleteFamily(BaseFamily):
    """``K_n`` on ``0..n-1`` plus the vertex ``n`` adjacent to ``0..r-1``.

    Any ``r``-subset of ``K_n`` gives an isomorphic graph, so the first ``r`` are used.
    """

    tag = "attached"
    arity = 2
    kind = FingerprintKind.FULL

    def check_bounds(self, params):
        n, r = params
        require(n >= 1, f"attached complete graph needs n >= 1, got {n}")
        require(0 <= r <= n, f"attached complete graph needs 0 <= r <= n, got r={r}, n={n}")

    def order(self, params):
        return params[0] + 1

    def build(self, params) -> Graph:
        n, r = params
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges += [(u, n) for u in range(r)]
        return graph_from_edge_list(n + 1, edges)

    def fingerprint(self, params, mode: ErrataMode) -> Fingerprint:
        n, r = params
        s = n - r
        attached_side = complete_poly(r)
        far_side = complete_poly(s)
        # Subsets of R with or without the new vertex, subsets of the rest, sets meeting both.
        poly = poly_mul(BiPoly({(0, 0): 1, (1, 2): 1}), attached_side)
        poly = poly_add(poly, poly_mul(_Y, far_side))
        poly = poly_add(poly, poly_mul(_Y, poly_mul(attached_side, far_side)))
        # The new vertex alone, then with a nonempty part of R and j >= 1 vertices beyond it.
        poly = poly_add(poly, BiPoly.monomial(1, n + 1 - r))
        beyond = BiPoly.from_terms(
            (j, min(2 * j, s + 1), comb(s, j)) for j in range(1, s + 1)
        )
        poly = poly_add(poly, poly_mul(_X_Y, poly_mul(attached_side, beyond)))
        return self._full(params, poly)

    @staticmethod
    def candidates(order: int, unit_slice: UniPoly) -> list[tuple[int, ...]]:
        # The attached vertex has degree r and contributes x y^(order - r).
        n = order - 1
        found = []
        for exponent, _ in unit_slice.terms():
            r = order - exponent
            if 0 <= r <= n:
                found.append((n, r))
        return found
