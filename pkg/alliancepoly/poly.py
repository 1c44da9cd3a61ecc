"""Exact sparse polynomials with nonnegative big-integer coefficients.

``BiPoly`` holds polynomials in ``x`` and ``y`` (the value type of every defensive
alliance polynomial); ``UniPoly`` holds the univariate polynomials derived from them.
Both are immutable and canonical: zero coefficients are never stored and terms are
kept sorted by exponent.
"""

import json
from collections.abc import Iterable, Iterator, Mapping
from typing import Literal

from .errors import DomainError, PolyFormatError

Monomial = tuple[int, int]
Variable = Literal["x", "y"]


def _power(var: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return var
    return f"{var}^{exponent}"


def _monomial_text(coefficient: int, powers: str) -> str:
    if not powers:
        return str(coefficient)
    if coefficient == 1:
        return powers
    return f"{coefficient}{powers}"


def _check_exponent(value: object, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise DomainError(f"{what} must be a nonnegative integer, got {value!r}")
    return value


class BiPoly:
    """Polynomial in ``x`` and ``y``, stored as ``{(a, b): c}`` for the terms ``c x^a y^b``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        canonical: dict[Monomial, int] = {}
        for (a, b), c in sorted((terms or {}).items()):
            _check_exponent(a, "x-exponent")
            _check_exponent(b, "y-exponent")
            if not isinstance(c, int) or c < 0:
                raise DomainError(f"coefficient of x^{a}y^{b} must be a nonnegative integer")
            if c:
                canonical[(a, b)] = c
        self._terms = canonical
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, terms: dict[Monomial, int]) -> "BiPoly":
        """Adopt an already-validated dict, re-sorting and dropping zeros."""
        poly = cls.__new__(cls)
        poly._terms = {key: terms[key] for key in sorted(terms) if terms[key]}
        poly._hash = None
        return poly

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int, int]]) -> "BiPoly":
        """Build from ``(a, b, c)`` triples; repeated monomials are summed."""
        merged: dict[Monomial, int] = {}
        for a, b, c in terms:
            merged[(a, b)] = merged.get((a, b), 0) + c
        return cls(merged)

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> "BiPoly":
        return cls({(a, b): c})

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    def terms(self) -> Iterator[tuple[int, int, int]]:
        """Iterate ``(a, b, c)`` in canonical order (``a`` then ``b`` ascending)."""
        for (a, b), c in self._terms.items():
            yield a, b, c

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"BiPoly({to_canonical_text(self)!r})"

    def __str__(self) -> str:
        return to_canonical_text(self)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        return poly_add(self, other)

    def __mul__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            return poly_scale(self, other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiPoly":
        return poly_pow(self, exponent)

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**a * y**b for (a, b), c in self._terms.items())


class UniPoly:
    """Polynomial in a single variable (``x`` or ``y``), stored as ``{exponent: c}``."""

    __slots__ = ("var", "_terms")

    def __init__(self, var: Variable, terms: Mapping[int, int] | None = None):
        if var not in ("x", "y"):
            raise DomainError(f"unknown variable {var!r}")
        canonical: dict[int, int] = {}
        for e, c in sorted((terms or {}).items()):
            _check_exponent(e, "exponent")
            if not isinstance(c, int) or c < 0:
                raise DomainError(f"coefficient of {var}^{e} must be a nonnegative integer")
            if c:
                canonical[e] = c
        self.var: Variable = var
        self._terms = canonical

    @classmethod
    def from_terms(cls, var: Variable, terms: Iterable[tuple[int, int]]) -> "UniPoly":
        """Build from ``(exponent, c)`` pairs; repeated exponents are summed."""
        merged: dict[int, int] = {}
        for e, c in terms:
            merged[e] = merged.get(e, 0) + c
        return cls(var, merged)

    def terms(self) -> Iterator[tuple[int, int]]:
        yield from self._terms.items()

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    @property
    def degree(self) -> int:
        if not self._terms:
            raise DomainError("the zero polynomial has no degree")
        return max(self._terms)

    def evaluate(self, value: int) -> int:
        return sum(c * value**e for e, c in self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.var == other.var and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.var, tuple(self._terms.items())))

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if self.var != other.var:
            raise DomainError(f"cannot add polynomials in {self.var} and {other.var}")
        merged = dict(self._terms)
        for e, c in other._terms.items():
            merged[e] = merged.get(e, 0) + c
        return UniPoly(self.var, merged)

    def __repr__(self) -> str:
        return f"UniPoly({self.var!r}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_monomial_text(c, _power(self.var, e)) for e, c in self._terms.items())

    def to_dict(self) -> dict:
        return {
            "var": self.var,
            "terms": [{"e": e, "c": str(c)} for e, c in self._terms.items()],
        }


# --- ring operations -------------------------------------------------------------------


def poly_add(p: BiPoly, q: BiPoly) -> BiPoly:
    merged = dict(p._terms)
    for key, c in q._terms.items():
        merged[key] = merged.get(key, 0) + c
    return BiPoly._wrap(merged)


def poly_sub(p: BiPoly, q: BiPoly) -> BiPoly:
    """Exact difference; every coefficient of ``q`` must be covered by ``p``."""
    merged = dict(p._terms)
    for (a, b), c in q._terms.items():
        remaining = merged.get((a, b), 0) - c
        if remaining < 0:
            raise DomainError(f"subtraction leaves a negative coefficient at x^{a}y^{b}")
        merged[(a, b)] = remaining
    return BiPoly._wrap(merged)


def poly_mul(p: BiPoly, q: BiPoly) -> BiPoly:
    product: dict[Monomial, int] = {}
    for (a1, b1), c1 in p._terms.items():
        for (a2, b2), c2 in q._terms.items():
            key = (a1 + a2, b1 + b2)
            product[key] = product.get(key, 0) + c1 * c2
    return BiPoly._wrap(product)


def poly_scale(p: BiPoly, c: int) -> BiPoly:
    if c < 0:
        raise DomainError(f"scale factor must be nonnegative, got {c}")
    return BiPoly._wrap({key: value * c for key, value in p._terms.items()})


def poly_pow(p: BiPoly, exponent: int) -> BiPoly:
    if exponent < 0:
        raise DomainError(f"exponent must be nonnegative, got {exponent}")
    result = BiPoly.one()
    base = p
    while exponent:
        if exponent & 1:
            result = poly_mul(result, base)
        exponent >>= 1
        if exponent:
            base = poly_mul(base, base)
    return result


def shift_y(p: BiPoly, d: int) -> BiPoly:
    """Multiply by ``y^d``; a negative ``d`` divides and must not produce a negative exponent."""
    shifted: dict[Monomial, int] = {}
    for (a, b), c in p._terms.items():
        if b + d < 0:
            raise DomainError(f"shifting x^{a}y^{b} by y^{d} gives a negative exponent")
        shifted[(a, b + d)] = c
    return BiPoly._wrap(shifted)


# --- coefficient access ----------------------------------------------------------------


def coeff(p: BiPoly, a: int, b: int) -> int:
    return p._terms.get((a, b), 0)


def slice_x(p: BiPoly, k: int) -> UniPoly:
    """``[x^k]p`` as a polynomial in ``y``."""
    return UniPoly("y", {b: c for (a, b), c in p._terms.items() if a == k})


def slice_y(p: BiPoly, l: int) -> UniPoly:  # noqa: E741
    """``[y^l]p`` as a polynomial in ``x``."""
    return UniPoly("x", {a: c for (a, b), c in p._terms.items() if b == l})


def substitute_y_one(p: BiPoly) -> UniPoly:
    """``p(x, 1)``."""
    return UniPoly.from_terms("x", ((a, c) for (a, _), c in p._terms.items()))


def substitute_x_one(p: BiPoly) -> UniPoly:
    """``p(1, y)``."""
    return UniPoly.from_terms("y", ((b, c) for (_, b), c in p._terms.items()))


def x_degree(p: BiPoly) -> int:
    if not p:
        raise DomainError("the zero polynomial has no x-degree")
    return max(a for a, _ in p._terms)


def y_exponents(p: BiPoly) -> list[int]:
    """Distinct y-exponents of ``p`` in ascending order."""
    return sorted({b for _, b in p._terms})


# --- text and JSON ---------------------------------------------------------------------


def to_canonical_text(p: BiPoly) -> str:
    """Render as ``2xy + x^2y^3``; coefficient 1 and exponent 1 are elided."""
    if not p:
        return "0"
    return " + ".join(
        _monomial_text(c, _power("x", a) + _power("y", b)) for (a, b), c in p._terms.items()
    )


def poly_document(p: BiPoly, n: int | None = None) -> dict:
    """JSON-ready document; coefficients are decimal strings."""
    doc: dict = {}
    if n is not None:
        doc["n"] = n
    doc["terms"] = [{"x": a, "y": b, "c": str(c)} for (a, b), c in p._terms.items()]
    return doc


def to_json(p: BiPoly, n: int | None = None) -> str:
    return json.dumps(poly_document(p, n), separators=(",", ":"))


def load_poly_document(text: str) -> tuple[BiPoly, int | None]:
    """Parse a polynomial JSON document, returning the polynomial and its optional order."""
    try:
        doc = json.loads(text)
    except ValueError as e:
        # JSONDecodeError, or an integer literal past the int-string conversion limit
        raise PolyFormatError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict) or not isinstance(doc.get("terms"), list):
        raise PolyFormatError("polynomial document must be an object with a 'terms' list")

    n = doc.get("n")
    if n is not None and (not isinstance(n, int) or isinstance(n, bool) or n < 1):
        raise PolyFormatError(f"'n' must be a positive integer, got {n!r}")

    terms: dict[Monomial, int] = {}
    for index, term in enumerate(doc["terms"]):
        if not isinstance(term, dict) or set(term) != {"x", "y", "c"}:
            raise PolyFormatError(f"term {index} must have exactly the keys x, y, c")
        a, b, c = term["x"], term["y"], term["c"]
        for name, value in (("x", a), ("y", b)):
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise PolyFormatError(f"term {index}: '{name}' must be a nonnegative integer")
        if not isinstance(c, str) or not (c.isascii() and c.isdigit()):
            raise PolyFormatError(f"term {index}: 'c' must be a nonnegative decimal string")
        try:
            value = int(c)
        except ValueError as e:
            raise PolyFormatError(f"term {index}: coefficient is too long: {e}") from e
        if value == 0:
            raise PolyFormatError(f"term {index}: zero coefficient is not canonical")
        if (a, b) in terms:
            raise PolyFormatError(f"term {index}: duplicate monomial x^{a}y^{b}")
        terms[(a, b)] = value
    return BiPoly(terms), n


def from_json(text: str) -> BiPoly:
    return load_poly_document(text)[0]
