"""Double stars and complete bipartite graphs."""

from math import comb

from ..graph import Graph, empty_graph, graph_from_edge_list, join
from ..poly import UniPoly
from .base import BaseFamily, require, y_poly
from .models import ErrataMode, Fingerprint, FingerprintKind


class DoubleStarFamily(BaseFamily):
    """``S_{r,t}``: center ``0`` with leaves ``1..r``, center ``r+1`` with the next ``t``."""

    tag = "double_star"
    arity = 2
    kind = FingerprintKind.SLICE

    def check_bounds(self, params):
        r, t = params
        require(r >= 1 and t >= 1, f"double star needs r, t >= 1, got {params}")

    def order(self, params):
        return params[0] + params[1] + 2

    def build(self, params) -> Graph:
        r, t = params
        second = r + 1
        edges = [(0, second)]
        edges += [(0, leaf) for leaf in range(1, r + 1)]
        edges += [(second, leaf) for leaf in range(second + 1, second + t + 1)]
        return graph_from_edge_list(r + t + 2, edges)

    def fingerprint(self, params, mode: ErrataMode) -> Fingerprint:
        r, t = params
        return self._slices(
            params,
            {
                1: y_poly((r + t, r + t + 1), (1, r + 1), (1, t + 1)),
                r + t + 2: y_poly((1, r + t + 3)),
            },
        )

    @staticmethod
    def candidates(order: int, unit_slice: UniPoly) -> list[tuple[int, ...]]:
        # Leaves sit at y^(order-1); the two centers at y^(r+1) and y^(t+1).
        centers = []
        for exponent, count in unit_slice.terms():
            if exponent != order - 1:
                centers.extend([exponent] * count)
        if len(centers) != 2:
            return []
        r, t = sorted(e - 1 for e in centers)
        return [(r, t)] if r + t == order - 2 else []


class CompleteBipartiteFamily(BaseFamily):
    """``K_{n,m} = nK_1 + mK_1``: part ``0..n-1`` and part ``n..n+m-1``."""

    tag = "complete_bipartite"
    arity = 2
    kind = FingerprintKind.FULL

    def check_bounds(self, params):
        n, m = params
        require(n >= 1 and m >= 1, f"complete bipartite graph needs n, m >= 1, got {params}")

    def order(self, params):
        return params[0] + params[1]

    def build(self, params) -> Graph:
        n, m = params
        return join(empty_graph(n), empty_graph(m))

    def fingerprint(self, params, mode: ErrataMode) -> Fingerprint:
        n, m = params
        terms = [(1, n, n), (1, m, m)]
        for i in range(1, n + 1):
            for j in range(1, m + 1):
                exponent = n + m + min(2 * i - n, 2 * j - m)
                terms.append((i + j, exponent, comb(n, i) * comb(m, j)))
        return self._full(params, terms)

    @staticmethod
    def candidates(order: int, unit_slice: UniPoly) -> list[tuple[int, ...]]:
        # Each vertex of the part of size p has degree order - p, hence the term p y^p.
        terms = list(unit_slice.terms())
        if len(terms) == 2 and all(e == c for e, c in terms):
            sizes = sorted(e for e, _ in terms)
        elif len(terms) == 1 and terms[0][1] == 2 * terms[0][0]:
            sizes = [terms[0][0]] * 2
        else:
            return []
        return [tuple(sizes)] if sum(sizes) == order else []
