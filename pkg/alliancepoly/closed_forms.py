"""Closed-form fingerprints, the disjoint-union law and fingerprint matching."""

from collections.abc import Iterable

from .errors import DomainError, FamilySpecError
from .families import NAMED_TAG, ErrataMode, FamilySpec, Fingerprint, FingerprintKind, get_family
from .poly import BiPoly, poly_add, shift_y, slice_x


def closed_form(spec: FamilySpec, mode: ErrataMode = ErrataMode.CORRECTED) -> Fingerprint:
    """What is known in closed form about ``da`` of the instance ``spec`` describes.

    ``mode`` only affects the star, whose printed formula disagrees with a direct
    count; PRINTED emits it anyway with ``erratum`` set.
    """
    if spec.family == NAMED_TAG:
        raise FamilySpecError("named graphs have no closed form; enumerate them instead")
    family = get_family(spec.family)
    family.validate(spec.params)
    return family.fingerprint(spec.params, mode)


def expanded_text(spec: FamilySpec, mode: ErrataMode = ErrataMode.CORRECTED) -> str:
    """Render a fingerprint as text: the polynomial, or one ``[x^k]: ...`` line per slice."""
    fp = closed_form(spec, mode)
    if fp.kind is FingerprintKind.FULL:
        return str(fp.poly)
    return "\n".join(f"[x^{k}]: {s}" for k, s in sorted(fp.slices.items()))


def union_law(parts: Iterable[tuple[BiPoly, int]]) -> BiPoly:
    """``da`` of a disjoint union from ``(da, order)`` of each part.

    Each part's alliance values are relative to its own order, so its terms move up
    by the order of the rest of the union.
    """
    parts = list(parts)
    total = sum(order for _, order in parts)
    result = BiPoly.zero()
    for da, order in parts:
        if order < 1:
            raise DomainError(f"component order must be positive, got {order}")
        result = poly_add(result, shift_y(da, total - order))
    return result


def matches(fp: Fingerprint, da: BiPoly) -> bool:
    if fp.kind is FingerprintKind.FULL:
        return fp.poly == da
    return all(slice_x(da, k) == required for k, required in fp.slices.items())
