"""Connected-subset enumeration and the defensive alliance polynomial.

Every nonempty vertex set ``S`` that induces a connected subgraph contributes
``x^|S| y^f(S)`` with ``f(S) = n + min over u in S of (2 * deg_S(u) - deg(u))``, where
``deg_S(u)`` counts the neighbors of ``u`` inside ``S`` and ``n`` is the order of the
whole graph. See ``docs/enumeration.md`` for the expansion scheme.
"""

import logging
import os
import time
from collections import Counter
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .errors import ConfigError, DomainError, GuardExceededError, InvariantError
from .graph import Graph, VertexSubset
from .poly import BiPoly, UniPoly

logger = logging.getLogger(__name__)

DEFAULT_MAX_SUBGRAPHS = 50_000_000
GUARD_ENV_VAR = "ALLIANCEPOLY_GUARD"

# f(S), the y-exponent of the monomial contributed by S.
AllianceValue = int
Visitor = Callable[[VertexSubset, AllianceValue], None]


@dataclass(frozen=True)
class EnumConfig:
    """Knobs for one enumeration run."""

    max_subgraphs: int = DEFAULT_MAX_SUBGRAPHS
    parallel: bool = False
    workers: int | None = None  # None: one per CPU
    debug_check: bool = False  # recompute f(S) from scratch at every visited set

    def __post_init__(self) -> None:
        if self.max_subgraphs < 1:
            raise ConfigError(f"max_subgraphs must be at least 1, got {self.max_subgraphs}")
        if self.workers is not None and self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None, **overrides) -> "EnumConfig":
        """Default config with the guard taken from ``ALLIANCEPOLY_GUARD`` when set.

        Keyword overrides whose value is ``None`` are ignored, so CLI flags can be passed
        through unconditionally.
        """
        env = os.environ if environ is None else environ
        config = cls()
        raw = env.get(GUARD_ENV_VAR)
        if raw is not None and raw.strip():
            try:
                config = replace(config, max_subgraphs=int(raw))
            except ValueError as e:
                raise ConfigError(
                    f"{GUARD_ENV_VAR} must be a positive integer, got {raw!r}"
                ) from e
        given = {key: value for key, value in overrides.items() if value is not None}
        return replace(config, **given) if given else config


@dataclass
class EnumResult:
    """Outcome of one polynomial computation."""

    poly: BiPoly
    visited: int
    elapsed: float = field(default=0.0)


def alliance_value(g: Graph, s: VertexSubset | int) -> AllianceValue:
    """``f(S)``, computed from scratch; independent of whether ``G[S]`` is connected."""
    subset = s.mask if isinstance(s, VertexSubset) else s
    if not subset:
        raise DomainError("alliance value of the empty set is undefined")
    adjacency = g.adjacency
    best = None
    mask = subset
    while mask:
        low = mask & -mask
        u = low.bit_length() - 1
        mask ^= low
        value = 2 * (adjacency[u] & subset).bit_count() - adjacency[u].bit_count()
        if best is None or value < best:
            best = value
    return g.n + best


def is_defensive_k_alliance(g: Graph, s: VertexSubset | int, k: int) -> bool:
    """Every member has at least ``k`` more neighbors inside ``S`` than outside."""
    delta = g.max_degree
    if not -delta <= k <= delta:
        raise DomainError(f"k must lie in {-delta}..{delta} for this graph, got {k}")
    return alliance_value(g, s) >= g.n + k


def is_defensive_alliance(g: Graph, s: VertexSubset | int) -> bool:
    return alliance_value(g, s) >= g.n - 1


def is_strong_defensive_alliance(g: Graph, s: VertexSubset | int) -> bool:
    return alliance_value(g, s) >= g.n


def _doubled(mask: int) -> int:
    """Spread bit ``v`` of ``mask`` onto bits ``2v`` and ``2v + 1``."""
    result = 0
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        result |= 3 << (2 * v)
        mask ^= low
    return result


class _Expander:
    """Root-anchored expansion over the connected vertex sets of one graph.

    Each connected set is produced exactly once, from its smallest vertex: the branch that
    adds candidate ``w`` forbids every candidate taken before ``w`` at the same level.

    ``f(S)`` is read off popcounts. Row ``u`` of ``_weighted`` holds each neighbor bit
    twice plus ``max_degree - deg(u)`` ballast bits that are always set in the doubled
    subset mask, so ``popcount(row & doubled(S)) = 2 * deg_S(u) + max_degree - deg(u)``.
    """

    def __init__(self, g: Graph, limit: int, debug_check: bool = False):
        self.g = g
        self.limit = limit
        self.debug_check = debug_check
        self.visited = 0
        max_degree = g.max_degree
        ballast_shift = 2 * g.n
        self._offset = g.n - max_degree
        self._ballast = ((1 << max_degree) - 1) << ballast_shift
        self._weighted = tuple(
            _doubled(row) | (((1 << (max_degree - row.bit_count())) - 1) << ballast_shift)
            for row in g.adjacency
        )

    def run(self, roots: Iterable[int], emit: Callable[[int, int, int], None]) -> int:
        """Call ``emit(mask, size, f)`` once per connected set whose minimum vertex is a root."""
        adjacency = self.g.adjacency
        weighted = self._weighted
        offset = self._offset
        members: list[int] = []

        def grow(s: int, doubled: int, candidates: int, forbidden: int, size: int) -> None:
            self.visited += 1
            if self.visited > self.limit:
                raise GuardExceededError(self.limit, self.visited - 1)
            value = offset + min(map(int.bit_count, map(doubled.__and__, members)))
            if self.debug_check and value != alliance_value(self.g, s):
                raise InvariantError(
                    f"incremental alliance value {value} differs from recomputed "
                    f"{alliance_value(self.g, s)} at subset {s:#x}"
                )
            emit(s, size, value)
            while candidates:
                low = candidates & -candidates
                candidates ^= low
                forbidden |= low
                w = low.bit_length() - 1
                members.append(weighted[w])
                grow(
                    s | low,
                    doubled | (3 << (2 * w)),
                    candidates | (adjacency[w] & ~forbidden),
                    forbidden,
                    size + 1,
                )
                members.pop()

        for root in roots:
            low = 1 << root
            forbidden = (low << 1) - 1
            members.append(weighted[root])
            start = self._ballast | (3 << (2 * root))
            grow(low, start, adjacency[root] & ~forbidden, forbidden, 1)
            members.pop()
        return self.visited


def enumerate_connected_subsets(
    g: Graph, visitor: Visitor, cfg: EnumConfig | None = None
) -> int:
    """Invoke ``visitor(subset, f(subset))`` once per nonempty connected induced subset.

    Returns the number of subsets visited. The visitor always runs in the calling process;
    ``cfg.parallel`` only affects :func:`compute_da`.
    """
    cfg = cfg or EnumConfig()
    expander = _Expander(g, cfg.max_subgraphs, cfg.debug_check)
    n = g.n

    def emit(mask: int, size: int, value: int) -> None:
        visitor(VertexSubset(mask, n), value)

    return expander.run(range(n), emit)


def _count_terms(
    g: Graph, roots: list[int], limit: int, debug_check: bool
) -> tuple[Counter, int]:
    terms: Counter = Counter()

    def emit(mask: int, size: int, value: int) -> None:
        terms[size, value] += 1

    visited = _Expander(g, limit, debug_check).run(roots, emit)
    return terms, visited


def compute_da(g: Graph, cfg: EnumConfig | None = None) -> EnumResult:
    """Enumerate ``g`` and assemble its defensive alliance polynomial."""
    cfg = cfg or EnumConfig()
    started = time.perf_counter()
    if cfg.parallel and g.n > 1:
        workers = min(cfg.workers or os.cpu_count() or 1, g.n)
        logger.debug("Splitting %d roots over %d workers", g.n, workers)
        partials = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_count_terms, g, [root], cfg.max_subgraphs, cfg.debug_check)
                for root in range(g.n)
            ]
            partials = [future.result() for future in futures]
        poly = BiPoly.zero()
        visited = 0
        for terms, count in partials:
            poly = poly + BiPoly(dict(terms))
            visited += count
        if visited > cfg.max_subgraphs:
            raise GuardExceededError(cfg.max_subgraphs, visited)
    else:
        terms, visited = _count_terms(g, list(range(g.n)), cfg.max_subgraphs, cfg.debug_check)
        poly = BiPoly(dict(terms))
    elapsed = time.perf_counter() - started
    logger.debug(
        "Enumerated %d connected subsets of an order-%d graph in %.3fs", visited, g.n, elapsed
    )
    return EnumResult(poly, visited, elapsed)


def defensive_alliance_polynomial(g: Graph, cfg: EnumConfig | None = None) -> BiPoly:
    """``da(G; x, y)``."""
    return compute_da(g, cfg).poly


# --- independent oracles -----------------------------------------------------------------


def naive_connected_subsets(g: Graph) -> list[tuple[int, AllianceValue]]:
    """Brute force over all ``2^n - 1`` subsets: ``(mask, f)`` for every connected one."""
    return [
        (mask, alliance_value(g, mask))
        for mask in range(1, 1 << g.n)
        if g.induces_connected(mask)
    ]


def naive_defensive_alliance_polynomial(g: Graph) -> BiPoly:
    return BiPoly.from_terms(
        (mask.bit_count(), value, 1) for mask, value in naive_connected_subsets(g)
    )


def alliance_polynomial_direct(g: Graph, cfg: EnumConfig | None = None) -> UniPoly:
    """``A(G; y)`` summed straight from the visited sets, without building ``da``."""
    counts: Counter = Counter()
    enumerate_connected_subsets(g, lambda s, value: counts.update((value,)), cfg)
    return UniPoly("y", dict(counts))


def strong_alliance_polynomial_direct(g: Graph, cfg: EnumConfig | None = None) -> UniPoly:
    """``a(G; x)`` from the strong defensive alliance predicate on every visited set."""
    counts: Counter = Counter()

    def visit(s: VertexSubset, value: AllianceValue) -> None:
        if is_strong_defensive_alliance(g, s):
            counts[len(s)] += 1

    enumerate_connected_subsets(g, visit, cfg)
    return UniPoly("x", dict(counts))


def defensive_k_alliance_polynomial(g: Graph, k: int, cfg: EnumConfig | None = None) -> UniPoly:
    """Cardinality polynomial of the connected defensive ``k``-alliances of ``g``."""
    delta = g.max_degree
    if not -delta <= k <= delta:
        raise DomainError(f"k must lie in {-delta}..{delta} for this graph, got {k}")
    counts: Counter = Counter()

    def visit(s: VertexSubset, value: AllianceValue) -> None:
        if value >= g.n + k:
            counts[len(s)] += 1

    enumerate_connected_subsets(g, visit, cfg)
    return UniPoly("x", dict(counts))
