"""Distinguishing-power experiments: pairwise comparison, small-graph isomorphism, corpus scans."""

import logging
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Any

from tqdm import tqdm

from .corpus import CorpusEntry
from .derived import (
    alliance_polynomial,
    induced_connected_subgraph_polynomial,
    strong_alliance_polynomial,
)
from .enumeration import EnumConfig, compute_da
from .errors import DomainError, GuardExceededError, InvariantError
from .graph import Graph, iter_bits
from .poly import BiPoly

logger = logging.getLogger(__name__)

DEFAULT_ISO_LIMIT = 10

SCAN_KEYS: tuple[str, ...] = ("da", "A", "q", "a")


# --- isomorphism -------------------------------------------------------------------------


def _search_order(g: Graph) -> list[int]:
    """Vertices ordered so that each one has as many already-placed neighbors as possible."""
    remaining = set(range(g.n))
    placed = 0
    order = []
    while remaining:
        u = max(
            remaining,
            key=lambda v: ((g.adjacency[v] & placed).bit_count(), g.degree(v), -v),
        )
        remaining.discard(u)
        placed |= 1 << u
        order.append(u)
    return order


def are_isomorphic_small(g: Graph, h: Graph, limit: int = DEFAULT_ISO_LIMIT) -> bool:
    """Exact isomorphism test by backtracking over degree-preserving assignments."""
    for graph in (g, h):
        if graph.n > limit:
            raise DomainError(f"isomorphism test is limited to order {limit}, got {graph.n}")
    if g.n != h.n or g.size != h.size or g.degree_sequence() != h.degree_sequence():
        return False

    order = _search_order(g)
    image = [0] * g.n

    def translate(mask: int) -> int:
        result = 0
        for v in iter_bits(mask):
            result |= 1 << image[v]
        return result

    def extend(i: int, placed: int, used: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        expected = translate(g.adjacency[u] & placed)
        degree = g.degree(u)
        for v in iter_bits(~used & h.full_mask):
            if h.degree(v) != degree or h.adjacency[v] & used != expected:
                continue
            image[u] = v
            if extend(i + 1, placed | 1 << u, used | 1 << v):
                return True
        return False

    return extend(0, 0, 0)


# --- pairwise comparison ------------------------------------------------------------------


@dataclass
class CompareReport:
    """Which polynomials of two graphs coincide."""

    da_equal: bool
    A_equal: bool
    q_equal: bool
    a_equal: bool
    isomorphic: bool | None = None  # None when either order exceeds the isomorphism limit
    left: str = ""
    right: str = ""

    def __post_init__(self) -> None:
        if self.isomorphic and not self.da_equal:
            raise InvariantError(f"{self.left} and {self.right} are isomorphic but da differs")
        if self.da_equal and not (self.A_equal and self.q_equal and self.a_equal):
            raise InvariantError(
                f"{self.left} and {self.right} share da but not a derived polynomial"
            )

    def to_dict(self) -> dict[str, Any]:
        return {
            "a": self.left,
            "b": self.right,
            "da_equal": self.da_equal,
            "A_equal": self.A_equal,
            "q_equal": self.q_equal,
            "a_equal": self.a_equal,
            "isomorphic": self.isomorphic,
        }

    def to_text(self) -> str:
        iso = "n/a" if self.isomorphic is None else ("yes" if self.isomorphic else "no")
        rows = [
            ("da equal", self.da_equal),
            ("A equal", self.A_equal),
            ("q equal", self.q_equal),
            ("a equal", self.a_equal),
        ]
        lines = [f"{self.left} vs {self.right}"]
        lines += [f"  {name:<10} {'yes' if value else 'no'}" for name, value in rows]
        lines.append(f"  {'isomorphic':<10} {iso}")
        return "\n".join(lines)


def _strong_key(da: BiPoly, n: int) -> tuple[int, str]:
    return n, str(strong_alliance_polynomial(da, n))


def compare_polynomials(
    da_g: BiPoly,
    n_g: int,
    da_h: BiPoly,
    n_h: int,
    isomorphic: bool | None = None,
    left: str = "",
    right: str = "",
) -> CompareReport:
    """Compare two graphs through their ``da`` and the three derived polynomials.

    Strong alliance polynomials only compare equal between graphs of the same order.
    """
    return CompareReport(
        da_equal=da_g == da_h,
        A_equal=alliance_polynomial(da_g) == alliance_polynomial(da_h),
        q_equal=(
            induced_connected_subgraph_polynomial(da_g)
            == induced_connected_subgraph_polynomial(da_h)
        ),
        a_equal=_strong_key(da_g, n_g) == _strong_key(da_h, n_h),
        isomorphic=isomorphic,
        left=left,
        right=right,
    )


def compare_graphs(
    g: Graph,
    h: Graph,
    cfg: EnumConfig | None = None,
    iso_limit: int = DEFAULT_ISO_LIMIT,
) -> CompareReport:
    da_g = compute_da(g, cfg).poly
    da_h = compute_da(h, cfg).poly
    isomorphic = None
    if g.n <= iso_limit and h.n <= iso_limit:
        isomorphic = are_isomorphic_small(g, h, iso_limit)
    return compare_polynomials(
        da_g, g.n, da_h, h.n, isomorphic, left=g.label or "G", right=h.label or "H"
    )


# --- corpus scan --------------------------------------------------------------------------


@dataclass
class Bucket:
    """Corpus members sharing one keyed polynomial exactly."""

    key: str
    members: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {"key": self.key, "members": self.members}


@dataclass
class ScanReport:
    key: str
    scanned: int
    buckets: list[Bucket]
    pairs: list[CompareReport]
    skipped: list[dict[str, str]] = field(default_factory=list)

    @property
    def split_by_da(self) -> list[CompareReport]:
        return [pair for pair in self.pairs if not pair.da_equal]

    @property
    def unresolved(self) -> list[CompareReport]:
        """Pairs sharing ``da`` that are not (or not known to be) isomorphic."""
        return [pair for pair in self.pairs if pair.da_equal and not pair.isomorphic]

    def to_dict(self) -> dict[str, Any]:
        return {
            "key": self.key,
            "scanned": self.scanned,
            "buckets": [bucket.to_dict() for bucket in self.buckets],
            "split_pairs": [{**pair.to_dict(), "key_equal": True} for pair in self.pairs],
            "skipped": self.skipped,
        }

    def to_text(self) -> str:
        shared = [bucket for bucket in self.buckets if len(bucket.members) > 1]
        lines = [
            f"scanned {self.scanned} graphs keyed by {self.key}: {len(self.buckets)} buckets, "
            f"{len(shared)} shared, {len(self.skipped)} skipped",
            f"pairs sharing {self.key}: {len(self.pairs)}, split by da: {len(self.split_by_da)}, "
            f"da-equal and not shown isomorphic: {len(self.unresolved)}",
        ]
        if self.pairs:
            width_a = max(len("a"), *(len(pair.left) for pair in self.pairs))
            width_b = max(len("b"), *(len(pair.right) for pair in self.pairs))
            lines.append("")
            lines.append(f"{'a':<{width_a}}  {'b':<{width_b}}  da_equal  isomorphic")
            for pair in self.pairs:
                iso = "n/a" if pair.isomorphic is None else str(pair.isomorphic).lower()
                da = str(pair.da_equal).lower()
                lines.append(f"{pair.left:<{width_a}}  {pair.right:<{width_b}}  {da:<8}  {iso}")
        return "\n".join(lines)


def _keyed_text(da: BiPoly, n: int, key: str) -> str:
    if key == "da":
        return str(da)
    if key == "A":
        return str(alliance_polynomial(da))
    if key == "q":
        return str(induced_connected_subgraph_polynomial(da))
    return f"n={n}: {strong_alliance_polynomial(da, n)}"


def _da_or_guard(g: Graph, cfg: EnumConfig) -> BiPoly | GuardExceededError:
    try:
        return compute_da(g, cfg).poly
    except GuardExceededError as e:
        return e


def _polynomials(
    graphs: list[tuple[str, Graph]], cfg: EnumConfig, progress: bool
) -> list[BiPoly | GuardExceededError]:
    """``da`` of every graph, in input order, one graph per worker task when parallel."""
    bar = tqdm(total=len(graphs), desc="enumerate", unit="graph", disable=not progress)
    with bar:
        if not cfg.parallel:
            results = []
            for _, g in graphs:
                results.append(_da_or_guard(g, cfg))
                bar.update()
            return results
        serial = replace(cfg, parallel=False)
        logger.debug("Enumerating %d graphs on %s workers", len(graphs), cfg.workers or "all")
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [pool.submit(_da_or_guard, g, serial) for _, g in graphs]
            results = []
            for future in futures:
                results.append(future.result())
                bar.update()
            return results


def scan_corpus(
    entries: Iterable[CorpusEntry],
    key: str = "A",
    cfg: EnumConfig | None = None,
    iso_limit: int = DEFAULT_ISO_LIMIT,
    progress: bool = False,
) -> ScanReport:
    """Bucket a corpus by one of its polynomials and compare every pair inside a bucket.

    Unreadable entries and graphs that trip the enumeration guard are skipped and
    listed in the report.
    """
    if key not in SCAN_KEYS:
        raise DomainError(f"scan key must be one of {', '.join(SCAN_KEYS)}, got {key!r}")
    cfg = cfg or EnumConfig()
    skipped: list[dict[str, str]] = []
    graphs: list[tuple[str, Graph]] = []
    for entry in entries:
        if entry.graph is None:
            skipped.append({"source": entry.source, "reason": entry.error or "unreadable"})
        else:
            graphs.append((entry.source, entry.graph))

    buckets: dict[str, Bucket] = {}
    # Bucket members by input position; sources label them but need not be unique.
    positions: dict[str, list[int]] = {}
    computed: dict[int, BiPoly] = {}
    for index, ((source, g), da) in enumerate(zip(graphs, _polynomials(graphs, cfg, progress))):
        if isinstance(da, GuardExceededError):
            logger.warning("Skipping %s: %s", source, da)
            skipped.append({"source": source, "reason": str(da)})
            continue
        text = _keyed_text(da, g.n, key)
        buckets.setdefault(text, Bucket(text)).members.append(source)
        positions.setdefault(text, []).append(index)
        computed[index] = da

    pairs = []
    for indices in positions.values():
        for i, j in combinations(indices, 2):
            (left, g), da_g = graphs[i], computed[i]
            (right, h), da_h = graphs[j], computed[j]
            isomorphic = None
            if g.n <= iso_limit and h.n <= iso_limit:
                isomorphic = da_g == da_h and are_isomorphic_small(g, h, iso_limit)
            pairs.append(compare_polynomials(da_g, g.n, da_h, h.n, isomorphic, left, right))

    report = ScanReport(key, len(graphs), list(buckets.values()), pairs, skipped)
    for pair in report.unresolved:
        logger.info("%s and %s share da; isomorphic: %s", pair.left, pair.right, pair.isomorphic)
    return report
