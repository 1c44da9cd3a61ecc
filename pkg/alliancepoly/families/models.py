"""Data models for graph families and their polynomial fingerprints."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..errors import FamilySpecError
from ..poly import BiPoly, UniPoly, poly_document


class ErrataMode(str, Enum):
    """Which star formula to emit: derived from the definition, or as printed."""

    CORRECTED = "corrected"
    PRINTED = "printed"


class FingerprintKind(str, Enum):
    FULL = "full"  # the complete polynomial
    SLICE = "slice"  # only some [x^k] slices are pinned down


class Evidence(str, Enum):
    FULL = "full"
    SLICE_CONFIRMED = "slice+enumeration"


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus its integer parameters, e.g. ``complete_bipartite:3,4``."""

    family: str
    params: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        name, sep, raw = text.strip().partition(":")
        if not name or not sep or not raw.strip():
            raise FamilySpecError(f"family spec must look like 'name:p1,p2', got {text!r}")
        try:
            params = tuple(int(tok) for tok in raw.split(","))
        except ValueError as e:
            raise FamilySpecError(f"family parameters must be integers: {text!r}") from e
        return cls(name.strip().lower(), params)

    def __str__(self) -> str:
        return f"{self.family}:{','.join(str(p) for p in self.params)}"

    def to_dict(self) -> dict[str, Any]:
        return {"family": self.family, "params": list(self.params)}


@dataclass(frozen=True)
class Fingerprint:
    """What is known in closed form about a family instance's polynomial.

    A FULL fingerprint carries the whole polynomial; a SLICE fingerprint maps some
    x-powers ``k`` to the required ``[x^k]da`` polynomial in ``y``.
    """

    spec: FamilySpec
    kind: FingerprintKind
    poly: BiPoly | None = None
    slices: dict[int, UniPoly] = field(default_factory=dict)
    erratum: bool = False  # emitted verbatim although it disagrees with the definition

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"spec": str(self.spec), "kind": self.kind.value}
        if self.poly is not None:
            data["poly"] = poly_document(self.poly)
            data["text"] = str(self.poly)
        if self.slices:
            data["slices"] = {
                str(k): {"text": str(s), **s.to_dict()} for k, s in sorted(self.slices.items())
            }
        if self.erratum:
            data["erratum"] = True
        return data


@dataclass(frozen=True)
class FamilyMatch:
    """A family instance whose polynomial equals a query polynomial."""

    spec: FamilySpec
    evidence: Evidence

    def to_dict(self) -> dict[str, Any]:
        return {"spec": str(self.spec), **self.spec.to_dict(), "evidence": self.evidence.value}
