"""Base family interface."""

from abc import ABC, abstractmethod
from typing import ClassVar

from ..errors import FamilySpecError
from ..graph import MAX_ORDER, Graph
from ..poly import BiPoly, UniPoly, poly_pow, poly_sub, shift_y
from .models import ErrataMode, FamilySpec, Fingerprint, FingerprintKind


def complete_poly(n: int) -> BiPoly:
    """``da(K_n) = ((1 + x y^2)^n - 1) / y``; the zero polynomial for ``n = 0``."""
    expanded = poly_sub(poly_pow(BiPoly({(0, 0): 1, (1, 2): 1}), n), BiPoly.one())
    return shift_y(expanded, -1)


def y_poly(*terms: tuple[int, int]) -> UniPoly:
    """Polynomial in ``y`` from ``(coefficient, exponent)`` pairs."""
    return UniPoly.from_terms("y", ((e, c) for c, e in terms))


class BaseFamily(ABC):
    """Abstract base class for a parameterized graph family.

    Each family is responsible for:
    - Checking its parameter bounds
    - Building the graph of an instance
    - Emitting the closed-form fingerprint of an instance
    - Proposing candidate parameters for a polynomial (used for identification)
    """

    tag: ClassVar[str]
    arity: ClassVar[int]
    kind: ClassVar[FingerprintKind]

    def validate(self, params: tuple[int, ...]) -> None:
        """Raise FamilySpecError unless ``params`` describe a valid instance."""
        if len(params) != self.arity:
            raise FamilySpecError(
                f"{self.tag} takes {self.arity} parameter(s), got {len(params)}"
            )
        self.check_bounds(params)
        order = self.order(params)
        if order > MAX_ORDER:
            raise FamilySpecError(f"{self.tag}:{params} has order {order} > {MAX_ORDER}")

    def spec(self, *params: int) -> FamilySpec:
        return FamilySpec(self.tag, tuple(params))

    @abstractmethod
    def check_bounds(self, params: tuple[int, ...]) -> None:
        pass

    @abstractmethod
    def order(self, params: tuple[int, ...]) -> int:
        pass

    @abstractmethod
    def build(self, params: tuple[int, ...]) -> Graph:
        """Construct the instance; vertices are numbered as documented per family."""
        pass

    @abstractmethod
    def fingerprint(self, params: tuple[int, ...], mode: ErrataMode) -> Fingerprint:
        pass

    @staticmethod
    @abstractmethod
    def candidates(order: int, unit_slice: UniPoly) -> list[tuple[int, ...]]:
        """Parameters worth testing for a polynomial of the given order.

        Args:
            order: ``[x]da(G; 1)``, the order of the graph
            unit_slice: ``[x]da(G; x, y)``, which encodes the degree sequence

        Returns:
            Parameter tuples; they may be out of bounds and are validated by the caller
        """
        pass

    def _full(self, params: tuple[int, ...], terms, erratum: bool = False) -> Fingerprint:
        return Fingerprint(
            spec=FamilySpec(self.tag, params),
            kind=FingerprintKind.FULL,
            poly=terms if isinstance(terms, BiPoly) else BiPoly.from_terms(terms),
            erratum=erratum,
        )

    def _slices(self, params: tuple[int, ...], slices: dict[int, UniPoly]) -> Fingerprint:
        return Fingerprint(
            spec=FamilySpec(self.tag, params), kind=FingerprintKind.SLICE, slices=slices
        )


def require(condition: bool, message: str) -> None:
    if not condition:
        raise FamilySpecError(message)
