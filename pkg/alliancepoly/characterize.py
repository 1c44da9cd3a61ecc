"""Identify the families a polynomial belongs to, and test characterizations on a corpus."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

from tqdm import tqdm

from .closed_forms import matches
from .compare import DEFAULT_ISO_LIMIT, are_isomorphic_small
from .corpus import CorpusEntry
from .enumeration import EnumConfig, compute_da
from .errors import DomainError, FamilySpecError
from .families import (
    FAMILIES,
    ErrataMode,
    Evidence,
    FamilyMatch,
    FamilySpec,
    FingerprintKind,
    make_family,
)
from .graph import encode_graph6
from .poly import BiPoly, slice_x
from .properties import degree_sequence_of, order_of

logger = logging.getLogger(__name__)


def _validate_query(da: BiPoly) -> int:
    n = order_of(da)
    if sum(degree_sequence_of(da)) % 2:
        raise DomainError("degree sequence read off the polynomial has an odd sum")
    return n


def identify_families(da: BiPoly, cfg: EnumConfig | None = None) -> list[FamilyMatch]:
    """Every registered family instance whose ``da`` equals the query exactly.

    Families known only through slices are confirmed by enumerating the instance.
    Overlaps such as ``cycle:3`` / ``complete:3`` are all reported.
    """
    n = _validate_query(da)
    unit_slice = slice_x(da, 1)
    found: list[FamilyMatch] = []
    for family_cls in FAMILIES:
        family = family_cls()
        for params in dict.fromkeys(family_cls.candidates(n, unit_slice)):
            try:
                family.validate(params)
            except FamilySpecError:
                continue
            if family.order(params) != n:
                continue
            fp = family.fingerprint(params, ErrataMode.CORRECTED)
            if not matches(fp, da):
                continue
            if fp.kind is FingerprintKind.FULL:
                found.append(FamilyMatch(fp.spec, Evidence.FULL))
            elif compute_da(family.build(params), cfg).poly == da:
                found.append(FamilyMatch(fp.spec, Evidence.SLICE_CONFIRMED))
            else:
                logger.debug("%s matches on its slices only", fp.spec)
    found.sort(key=lambda m: (m.spec.family, m.spec.params))
    return found


@dataclass
class CorpusHit:
    source: str
    graph6: str
    isomorphic: bool | None  # None when the order exceeds the isomorphism limit

    def to_dict(self) -> dict[str, Any]:
        return {"source": self.source, "graph6": self.graph6, "isomorphic": self.isomorphic}


@dataclass
class CharacterizationReport:
    """Corpus graphs sharing ``da`` with a family instance, and whether all are isomorphic to it."""

    query: FamilySpec
    matches: list[FamilyMatch]
    hits: list[CorpusHit] = field(default_factory=list)
    scanned: int = 0
    errors: list[dict[str, str]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(hit.isomorphic is True for hit in self.hits)

    def to_dict(self) -> dict[str, Any]:
        return {
            "query": str(self.query),
            "matches": [match.to_dict() for match in self.matches],
            "corpus_hits": [hit.to_dict() for hit in self.hits],
            "holds": self.holds,
            "scanned": self.scanned,
            "errors": self.errors,
        }

    def to_text(self) -> str:
        lines = [
            f"query: {self.query}",
            "matches: " + (", ".join(str(m.spec) for m in self.matches) or "none"),
            f"scanned: {self.scanned} graphs, {len(self.hits)} with equal da, "
            f"{len(self.errors)} unreadable",
        ]
        for hit in self.hits:
            iso = "n/a" if hit.isomorphic is None else str(hit.isomorphic).lower()
            lines.append(f"  {hit.source}  {hit.graph6}  isomorphic={iso}")
        lines.append(f"characterization holds on this corpus: {'yes' if self.holds else 'no'}")
        return "\n".join(lines)


def verify_characterization(
    spec: FamilySpec,
    corpus: Iterable[CorpusEntry],
    cfg: EnumConfig | None = None,
    iso_limit: int = DEFAULT_ISO_LIMIT,
    progress: bool = False,
) -> CharacterizationReport:
    """Scan ``corpus`` for graphs whose ``da`` equals that of the instance ``spec`` names.

    Only graphs with the instance's order and degree sequence are enumerated, since
    both are read off ``da``.
    """
    target = make_family(spec)
    target_da = compute_da(target, cfg).poly
    report = CharacterizationReport(spec, identify_families(target_da, cfg))
    degrees = target.degree_sequence()
    for entry in tqdm(corpus, desc="verify", unit="graph", disable=not progress):
        if entry.graph is None:
            report.errors.append({"source": entry.source, "reason": entry.error or "unreadable"})
            continue
        report.scanned += 1
        g = entry.graph
        if g.n != target.n or g.degree_sequence() != degrees:
            continue
        if compute_da(g, cfg).poly != target_da:
            continue
        isomorphic = None
        if g.n <= iso_limit:
            isomorphic = are_isomorphic_small(g, target, iso_limit)
        if isomorphic is False:
            logger.warning("%s shares da with %s but is not isomorphic to it", entry.source, spec)
        report.hits.append(CorpusHit(entry.source, encode_graph6(g), isomorphic))
    return report
