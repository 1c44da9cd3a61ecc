"""Wheels, fans, windmills and books: families built around a hub or a spine.

Only some slices of these families' polynomials have closed forms, so every
fingerprint here is of SLICE kind.
"""

from ..graph import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    graph_from_edge_list,
    join,
    path_graph,
)
from ..poly import UniPoly
from .base import BaseFamily, require, y_poly
from .models import ErrataMode, Fingerprint, FingerprintKind


def _matching(pairs: int) -> Graph:
    """``pairs`` disjoint copies of ``K_2``."""
    return graph_from_edge_list(2 * pairs, [(2 * i, 2 * i + 1) for i in range(pairs)])


class WheelFamily(BaseFamily):
    """``W_n = C_n + K_1``: rim ``0..n-1``, hub ``n``. ``W_3`` is ``K_4``."""

    tag = "wheel"
    arity = 1
    kind = FingerprintKind.SLICE

    def check_bounds(self, params):
        require(params[0] >= 3, f"wheel needs n >= 3, got {params[0]}")

    def order(self, params):
        return params[0] + 1

    def build(self, params) -> Graph:
        return join(cycle_graph(params[0]), empty_graph(1))

    def fingerprint(self, params, mode: ErrataMode) -> Fingerprint:
        (n,) = params
        return self._slices(
            params,
            {
                1: y_poly((n, n - 2), (1, 1)),
                n: y_poly((n + 1, n + 2)),
                n + 1: y_poly((1, n + 4)),
            },
        )

    @staticmethod
    def candidates(order: int, unit_slice: UniPoly) -> list[tuple[int, ...]]:
        return [(order - 1,)]


class OpenWheelFamily(BaseFamily):
    """``W'_n = P_n + K_1`` (the fan): path ``0..n-1``, hub ``n``."""

    tag = "open_wheel"
    arity = 1
    kind = FingerprintKind.SLICE

    def check_bounds(self, params):
        require(params[0] >= 4, f"open wheel needs n >= 4, got {params[0]}")

    def order(self, params):
        return params[0] + 1

    def build(self, params) -> Graph:
        return join(path_graph(params[0]), empty_graph(1))

    def fingerprint(self, params, mode: ErrataMode) -> Fingerprint:
        (n,) = params
        return self._slices(
            params,
            {
                1: y_poly((2, n - 1), (n - 2, n - 2), (1, 1)),
                n: y_poly((3, n + 1), (n - 2, n + 2)),
                n + 1: y_poly((1, n + 3)),
            },
        )

    @staticmethod
    def candidates(order: int, unit_slice: UniPoly) -> list[tuple[int, ...]]:
        return [(order - 1,)]


class FriendshipFamily(BaseFamily):
    """``F_n = nK_2 + K_1``: blades ``(2i, 2i+1)``, center ``2n``."""

    tag = "friendship"
    arity = 1
    kind = FingerprintKind.SLICE

    def check_bounds(self, params):
        require(params[0] >= 1, f"friendship graph needs n >= 1, got {params[0]}")

    def order(self, params):
        return 2 * params[0] + 1

    def build(self, params) -> Graph:
        return join(_matching(params[0]), empty_graph(1))

    def fingerprint(self, params, mode: ErrataMode) -> Fingerprint:
        (n,) = params
        return self._slices(params, {1: y_poly((2 * n, 2 * n - 1), (1, 1))})

    @staticmethod
    def candidates(order: int, unit_slice: UniPoly) -> list[tuple[int, ...]]:
        return [((order - 1) // 2,)] if order % 2 == 1 else []


class TriangularBookFamily(BaseFamily):
    """``B_n = nK_1 + K_2``: pages ``0..n-1``, spine ``n, n+1``."""

    tag = "triangular_book"
    arity = 1
    kind = FingerprintKind.SLICE

    def check_bounds(self, params):
        require(params[0] >= 1, f"triangular book needs n >= 1, got {params[0]}")

    def order(self, params):
        return params[0] + 2

    def build(self, params) -> Graph:
        return join(empty_graph(params[0]), complete_graph(2))

    def fingerprint(self, params, mode: ErrataMode) -> Fingerprint:
        (n,) = params
        return self._slices(params, {1: y_poly((2, 1), (n, n))})

    @staticmethod
    def candidates(order: int, unit_slice: UniPoly) -> list[tuple[int, ...]]:
        return [(order - 2,)]


class QuadrilateralBookFamily(BaseFamily):
    """``B_{n,2}``: ``n`` four-cycles sharing the spine edge ``(0, 1)``.

    Page ``i`` is the edge ``(2 + 2i, 3 + 2i)`` with ``2 + 2i`` adjacent to ``0`` and
    ``3 + 2i`` adjacent to ``1``.
    """

    tag = "quadrilateral_book"
    arity = 1
    kind = FingerprintKind.SLICE

    def check_bounds(self, params):
        require(params[0] >= 1, f"quadrilateral book needs n >= 1, got {params[0]}")

    def order(self, params):
        return 2 * params[0] + 2

    def build(self, params) -> Graph:
        (n,) = params
        edges = [(0, 1)]
        for i in range(n):
            a, b = 2 + 2 * i, 3 + 2 * i
            edges += [(0, a), (a, b), (b, 1)]
        return graph_from_edge_list(2 * n + 2, edges)

    def fingerprint(self, params, mode: ErrataMode) -> Fingerprint:
        (n,) = params
        return self._slices(
            params,
            {
                1: y_poly((2, n + 1), (2 * n, 2 * n)),
                2: y_poly((n, 2 * n + 2), (2 * n + 1, n + 3)),
                2 * n + 1: y_poly((2 * n + 2, 2 * n + 2)),
                2 * n + 2: y_poly((1, 2 * n + 4)),
            },
        )

    @staticmethod
    def candidates(order: int, unit_slice: UniPoly) -> list[tuple[int, ...]]:
        return [((order - 2) // 2,)] if order % 2 == 0 else []
