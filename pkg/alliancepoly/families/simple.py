"""Paths, cycles, stars and complete graphs."""

from math import comb

from ..graph import Graph, complete_graph, cycle_graph, empty_graph, join, path_graph
from ..poly import UniPoly
from .base import BaseFamily, complete_poly, require
from .models import ErrataMode, Fingerprint, FingerprintKind


class PathFamily(BaseFamily):
    """``P_n``, vertices ``0..n-1`` in path order."""

    tag = "path"
    arity = 1
    kind = FingerprintKind.FULL

    def check_bounds(self, params):
        require(params[0] >= 2, f"path needs n >= 2, got {params[0]}")

    def order(self, params):
        return params[0]

    def build(self, params) -> Graph:
        return path_graph(params[0])

    def fingerprint(self, params, mode: ErrataMode) -> Fingerprint:
        (n,) = params
        terms = [(1, n - 1, 2), (1, n - 2, n - 2), (n, n + 1, 1)]
        terms += [(i, n, n - i + 1) for i in range(2, n)]
        return self._full(params, terms)

    @staticmethod
    def candidates(order: int, unit_slice: UniPoly) -> list[tuple[int, ...]]:
        return [(order,)]


class CycleFamily(BaseFamily):
    """``C_n``, vertices ``0..n-1`` around the cycle."""

    tag = "cycle"
    arity = 1
    kind = FingerprintKind.FULL

    def check_bounds(self, params):
        require(params[0] >= 3, f"cycle needs n >= 3, got {params[0]}")

    def order(self, params):
        return params[0]

    def build(self, params) -> Graph:
        return cycle_graph(params[0])

    def fingerprint(self, params, mode: ErrataMode) -> Fingerprint:
        (n,) = params
        terms = [(1, n - 2, n), (n, n + 2, 1)]
        terms += [(i, n, n) for i in range(2, n)]
        return self._full(params, terms)

    @staticmethod
    def candidates(order: int, unit_slice: UniPoly) -> list[tuple[int, ...]]:
        return [(order,)]


class StarFamily(BaseFamily):
    """``S_n = nK_1 + K_1``: leaves ``0..n-1``, center ``n``."""

    tag = "star"
    arity = 1
    kind = FingerprintKind.FULL

    def check_bounds(self, params):
        require(params[0] >= 1, f"star needs n >= 1, got {params[0]}")

    def order(self, params):
        return params[0] + 1

    def build(self, params) -> Graph:
        return join(empty_graph(params[0]), empty_graph(1))

    def fingerprint(self, params, mode: ErrataMode) -> Fingerprint:
        (n,) = params
        if mode is ErrataMode.PRINTED:
            terms = [(1, 1, 1), (1, n - 1, n)]
            terms += [(i + 1, 2 * i, comb(n, i)) for i in range(1, n // 2 + 1)]
            terms += [(i + 1, n + 1, comb(n, i)) for i in range((n + 2) // 2, n + 1)]
            return self._full(params, terms, erratum=True)
        # A leaf alone scores n; the center with i leaves scores min(2i + 1, n + 2).
        terms = [(1, 1, 1), (1, n, n)]
        terms += [(i + 1, min(2 * i + 1, n + 2), comb(n, i)) for i in range(1, n + 1)]
        return self._full(params, terms)

    @staticmethod
    def candidates(order: int, unit_slice: UniPoly) -> list[tuple[int, ...]]:
        return [(order - 1,)]


class CompleteFamily(BaseFamily):
    """``K_n``."""

    tag = "complete"
    arity = 1
    kind = FingerprintKind.FULL

    def check_bounds(self, params):
        require(params[0] >= 1, f"complete graph needs n >= 1, got {params[0]}")

    def order(self, params):
        return params[0]

    def build(self, params) -> Graph:
        return complete_graph(params[0])

    def fingerprint(self, params, mode: ErrataMode) -> Fingerprint:
        return self._full(params, complete_poly(params[0]))

    @staticmethod
    def candidates(order: int, unit_slice: UniPoly) -> list[tuple[int, ...]]:
        return [(order,)]
