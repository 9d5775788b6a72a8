"""Unit tests for exact Laurent-polynomial arithmetic."""

from __future__ import annotations

import pytest

from clusteralg.errors import NotDivisible
from clusteralg.symbolic import LaurentPoly, exact_div, generators


def test_zero_coefficients_are_dropped():
    p = LaurentPoly(2, {(1, 0): 0, (0, 1): 3})
    assert p.terms == {(0, 1): 3}


def test_exponent_length_mismatch_rejected():
    with pytest.raises(ValueError):
        LaurentPoly(2, {(1,): 1})


def test_equality_and_hash_agree():
    a = LaurentPoly(2, {(1, -1): 2, (0, 0): 1})
    b = LaurentPoly(2, {(0, 0): 1, (1, -1): 2})
    assert a == b
    assert hash(a) == hash(b)
    assert a != LaurentPoly(2, {(1, -1): 2})


def test_addition_cancels_terms():
    a = LaurentPoly(1, {(2,): 3, (0,): 1})
    b = LaurentPoly(1, {(2,): -3, (1,): 5})
    assert a + b == LaurentPoly(1, {(0,): 1, (1,): 5})


def test_subtraction_of_self_is_zero():
    a = LaurentPoly(2, {(1, 2): 7, (-1, 0): -2})
    assert (a - a).is_zero()


def test_multiplication_hand_value():
    # (x + y)(x - y) = x^2 - y^2
    x, y = generators(2)
    assert (x + y) * (x - y) == LaurentPoly(2, {(2, 0): 1, (0, 2): -1})


def test_multiplication_with_negative_exponents():
    # (1 + x2)/x1 times x1 gives 1 + x2
    p = LaurentPoly(2, {(-1, 0): 1, (-1, 1): 1})
    x1 = LaurentPoly.generator(2, 1)
    assert p * x1 == LaurentPoly(2, {(0, 0): 1, (0, 1): 1})


def test_pow_matches_repeated_multiplication():
    x, y = generators(2)
    p = x + y + LaurentPoly.one(2)
    assert p.pow(3) == p * p * p
    assert p.pow(0).is_one()
    assert p.pow(1) == p


def test_pow_rejects_negative():
    with pytest.raises(ValueError):
        LaurentPoly.one(1).pow(-1)


def test_min_max_exponents():
    p = LaurentPoly(2, {(-1, 3): 1, (2, -2): 4})
    assert p.min_exponents() == (-1, -2)
    assert p.max_exponents() == (2, 3)
    assert LaurentPoly.zero(2).min_exponents() == (0, 0)


def test_exact_div_roundtrip():
    x, y = generators(2)
    q = LaurentPoly(2, {(1, 0): 1, (0, -1): 1})  # x1 + 1/x2
    p = q * (x * y + LaurentPoly.constant(2, 3))
    assert exact_div(p, q) == x * y + LaurentPoly.constant(2, 3)


def test_exact_div_detects_failure():
    x, y = generators(2)
    with pytest.raises(NotDivisible):
        exact_div(x + y, x + LaurentPoly.one(2))


def test_exact_div_integer_coefficient_failure():
    x = LaurentPoly.generator(1, 1)
    # 2x + 1 over 2 has no integer quotient
    with pytest.raises(NotDivisible):
        exact_div(x.scale(2) + LaurentPoly.one(1), LaurentPoly.constant(1, 2))


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_div(LaurentPoly.one(1), LaurentPoly.zero(1))


def test_canonical_string_roundtrip():
    p = LaurentPoly(2, {(-1, 2): -3, (0, 0): 1})
    s = p.canonical_string()
    assert LaurentPoly.from_canonical_string(2, s) == p
    assert LaurentPoly.from_canonical_string(2, "") == LaurentPoly.zero(2)


def test_pretty_uses_monomial_denominator():
    p = LaurentPoly(2, {(-1, 0): 1, (-1, 1): 1})
    assert p.pretty() == "(1 + x2)/x1"
    assert LaurentPoly.generator(2, 2).pretty(["a", "b"]) == "b"
    assert LaurentPoly.zero(2).pretty() == "0"


def test_pretty_denominator_product_is_parenthesized():
    p = LaurentPoly(2, {(-1, -1): 1, (0, -1): 1, (-1, 0): 1})
    assert p.pretty() == "(1 + x2 + x1)/(x1*x2)"


def test_generator_bounds():
    with pytest.raises(ValueError):
        LaurentPoly.generator(2, 3)
    with pytest.raises(ValueError):
        LaurentPoly.generator(2, 0)
