import json
import random
import sys
from math import comb

import pytest

from alliancepoly.errors import DomainError, PolyFormatError
from alliancepoly.families.base import complete_poly
from alliancepoly.poly import (
    BiPoly,
    UniPoly,
    coeff,
    from_json,
    load_poly_document,
    poly_sub,
    shift_y,
    slice_x,
    slice_y,
    substitute_x_one,
    substitute_y_one,
    to_canonical_text,
    to_json,
    x_degree,
    y_exponents,
)
from tests.conftest import poly_of

P4 = poly_of((1, 2, 2), (1, 3, 2), (2, 4, 3), (3, 4, 2), (4, 5, 1))


def test_canonical_text():
    assert to_canonical_text(P4) == "2xy^2 + 2xy^3 + 3x^2y^4 + 2x^3y^4 + x^4y^5"
    assert str(BiPoly.zero()) == "0"
    assert str(BiPoly.one()) == "1"
    assert str(BiPoly.monomial(0, 3, 5)) == "5y^3"
    assert str(BiPoly.monomial(2, 0)) == "x^2"


def test_terms_are_canonical():
    p = BiPoly({(3, 1): 2, (1, 5): 1, (1, 2): 0})
    assert list(p.terms()) == [(1, 5, 1), (3, 1, 2)]
    assert len(p) == 2
    assert poly_of((1, 1, 1), (1, 1, 2)) == BiPoly.monomial(1, 1, 3)
    assert hash(poly_of((1, 1, 3))) == hash(BiPoly.monomial(1, 1, 3))


@pytest.mark.parametrize(
    "terms",
    [{(-1, 0): 1}, {(0, 0): -2}, {(0, 0): 1.5}, {(True, 0): 1}],
)
def test_rejects_bad_terms(terms):
    with pytest.raises(DomainError):
        BiPoly(terms)


def test_arithmetic():
    x = BiPoly.monomial(1, 0)
    y = BiPoly.monomial(0, 1)
    one = BiPoly.one()
    assert (x + y) ** 2 == poly_of((2, 0, 1), (1, 1, 2), (0, 2, 1))
    assert (one + x) ** 0 == one
    assert 3 * x == BiPoly.monomial(1, 0, 3)
    assert x * 0 == BiPoly.zero()
    assert poly_sub(P4, BiPoly.monomial(1, 2, 2)) == poly_of(
        (1, 3, 2), (2, 4, 3), (3, 4, 2), (4, 5, 1)
    )
    with pytest.raises(DomainError):
        poly_sub(x, y)
    with pytest.raises(DomainError):
        x ** -1
    with pytest.raises(DomainError):
        x * -2


def _random_poly(rng):
    return BiPoly.from_terms(
        (rng.randrange(4), rng.randrange(4), rng.randrange(1, 6)) for _ in range(rng.randrange(5))
    )


def test_ring_laws_on_random_polynomials():
    rng = random.Random(11)
    zero, one = BiPoly.zero(), BiPoly.one()
    for _ in range(200):
        p, q, r = _random_poly(rng), _random_poly(rng), _random_poly(rng)
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + zero == p
        assert p * one == p
        assert p * zero == zero
        assert poly_sub(p + q, q) == p


def test_complete_graph_expansion_has_binomial_coefficients():
    for n in range(1, 16):
        p = complete_poly(n)
        assert len(p) == n
        for i in range(1, n + 1):
            assert coeff(p, i, 2 * i - 1) == comb(n, i)


def test_shift_y():
    assert shift_y(P4, 1) == poly_of((1, 3, 2), (1, 4, 2), (2, 5, 3), (3, 5, 2), (4, 6, 1))
    assert shift_y(shift_y(P4, 3), -3) == P4
    with pytest.raises(DomainError):
        shift_y(P4, -3)


def test_coefficient_access():
    assert coeff(P4, 2, 4) == 3
    assert coeff(P4, 2, 5) == 0
    assert slice_x(P4, 1) == UniPoly("y", {2: 2, 3: 2})
    assert slice_y(P4, 4) == UniPoly("x", {2: 3, 3: 2})
    assert slice_x(P4, 7) == UniPoly("y")
    assert substitute_x_one(P4) == UniPoly("y", {2: 2, 3: 2, 4: 5, 5: 1})
    assert substitute_y_one(P4) == UniPoly("x", {1: 4, 2: 3, 3: 2, 4: 1})
    assert x_degree(P4) == 4
    assert y_exponents(P4) == [2, 3, 4, 5]
    assert P4.evaluate(1, 1) == 10
    with pytest.raises(DomainError):
        x_degree(BiPoly.zero())


def test_unipoly_text_and_degree():
    p = UniPoly.from_terms("y", [(5, 4), (6, 4), (10, 1), (5, 0)])
    assert p.to_text() == "4y^5 + 4y^6 + y^10"
    assert p.degree == 10
    assert p.coefficient(6) == 4
    assert p.coefficient_sum() == 9
    assert p.evaluate(1) == 9
    assert str(UniPoly("x", {0: 2, 1: 1})) == "2 + x"
    assert str(UniPoly("x")) == "0"
    assert UniPoly("x", {1: 1}) != UniPoly("y", {1: 1})
    assert p.to_dict() == {
        "var": "y",
        "terms": [{"e": 5, "c": "4"}, {"e": 6, "c": "4"}, {"e": 10, "c": "1"}],
    }
    with pytest.raises(DomainError):
        UniPoly("x").degree
    with pytest.raises(DomainError):
        UniPoly("z")
    with pytest.raises(DomainError):
        UniPoly("x", {1: 1}) + UniPoly("y", {1: 1})


def test_json_document():
    k2 = poly_of((1, 1, 2), (2, 3, 1))
    assert to_json(k2, 2) == '{"n":2,"terms":[{"x":1,"y":1,"c":"2"},{"x":2,"y":3,"c":"1"}]}'
    assert load_poly_document(to_json(k2, 2)) == (k2, 2)
    assert from_json(to_json(k2)) == k2
    assert load_poly_document(to_json(k2)) == (k2, None)


def test_json_keeps_big_coefficients_exact():
    big = BiPoly.monomial(3, 4, 2**80 + 1)
    doc = json.loads(to_json(big))
    assert doc["terms"][0]["c"] == str(2**80 + 1)
    assert from_json(to_json(big)) == big


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"n": 2}',
        '{"n": 0, "terms": []}',
        '{"n": true, "terms": []}',
        '{"terms": [{"x": 1, "y": 1}]}',
        '{"terms": [{"x": 1, "y": 1, "c": "1", "d": 0}]}',
        '{"terms": [{"x": -1, "y": 1, "c": "1"}]}',
        '{"terms": [{"x": 1, "y": 1.0, "c": "1"}]}',
        '{"terms": [{"x": 1, "y": 1, "c": 1}]}',
        '{"terms": [{"x": 1, "y": 1, "c": "-1"}]}',
        '{"terms": [{"x": 1, "y": 1, "c": "0"}]}',
        '{"terms": [{"x": 1, "y": 1, "c": "1"}, {"x": 1, "y": 1, "c": "2"}]}',
    ],
)
def test_load_poly_document_rejects(text):
    with pytest.raises(PolyFormatError):
        load_poly_document(text)


DIGIT_LIMIT = getattr(sys, "get_int_max_str_digits", lambda: 0)()


@pytest.mark.skipif(not 0 < DIGIT_LIMIT < 5000, reason="no int-string conversion limit below 5000")
@pytest.mark.parametrize(
    "text",
    [
        '{"terms": [{"x": 1, "y": 1, "c": "' + "9" * 5000 + '"}]}',
        '{"n": ' + "1" * 5000 + ', "terms": []}',
    ],
)
def test_overlong_integers_are_format_errors(text):
    with pytest.raises(PolyFormatError):
        load_poly_document(text)
