"""Family registry for the graph classes with known polynomials."""

from ..errors import FamilySpecError
from ..graph import Graph
from .attached import AttachedCompleteFamily
from .base import BaseFamily
from .bipartite import CompleteBipartiteFamily, DoubleStarFamily
from .joins import (
    FriendshipFamily,
    OpenWheelFamily,
    QuadrilateralBookFamily,
    TriangularBookFamily,
    WheelFamily,
)
from .models import ErrataMode, Evidence, FamilyMatch, FamilySpec, Fingerprint, FingerprintKind
from .simple import CompleteFamily, CycleFamily, PathFamily, StarFamily

# Family registry - order is the order candidates are tried during identification
FAMILIES: list[type[BaseFamily]] = [
    PathFamily,
    CycleFamily,
    StarFamily,
    CompleteFamily,
    DoubleStarFamily,
    CompleteBipartiteFamily,
    WheelFamily,
    OpenWheelFamily,
    FriendshipFamily,
    TriangularBookFamily,
    QuadrilateralBookFamily,
    AttachedCompleteFamily,
]

NAMED_TAG = "named"


def family_tags() -> list[str]:
    return [family_cls.tag for family_cls in FAMILIES]


def get_family(tag: str) -> BaseFamily:
    """Get the family for a tag.

    Args:
        tag: Family tag such as "wheel" or "complete_bipartite"

    Returns:
        Family instance

    Raises:
        FamilySpecError: If no family is registered under ``tag``
    """
    for family_cls in FAMILIES:
        if family_cls.tag == tag:
            return family_cls()
    known = ", ".join(family_tags() + [NAMED_TAG])
    raise FamilySpecError(f"unknown family {tag!r} (known: {known})")


def make_family(spec: FamilySpec) -> Graph:
    """Build the graph an in-bounds spec describes; ``named:1``..``named:4`` are G1..G4."""
    if spec.family == NAMED_TAG:
        from ..named import named_graph

        if len(spec.params) != 1:
            raise FamilySpecError(f"named takes 1 parameter, got {len(spec.params)}")
        return named_graph(f"G{spec.params[0]}")
    family = get_family(spec.family)
    family.validate(spec.params)
    return family.build(spec.params).with_label(str(spec))


__all__ = [
    "FAMILIES",
    "NAMED_TAG",
    "family_tags",
    "get_family",
    "make_family",
    "BaseFamily",
    "ErrataMode",
    "Evidence",
    "FamilyMatch",
    "FamilySpec",
    "Fingerprint",
    "FingerprintKind",
    "PathFamily",
    "CycleFamily",
    "StarFamily",
    "CompleteFamily",
    "DoubleStarFamily",
    "CompleteBipartiteFamily",
    "WheelFamily",
    "OpenWheelFamily",
    "FriendshipFamily",
    "TriangularBookFamily",
    "QuadrilateralBookFamily",
    "AttachedCompleteFamily",
]
