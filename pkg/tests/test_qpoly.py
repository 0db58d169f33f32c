from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from csfpos.qpoly import ONE, ZERO, QPoly, from_powers, q

coeffs = st.lists(st.integers(-20, 20), max_size=6)
polys = coeffs.map(QPoly)


def test_trailing_zeros_dropped():
    assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPoly([0, 0]) == ZERO
    assert not ZERO


def test_str_human_form():
    assert str(QPoly([1, 2, 1])) == "1+2q+q^2"
    assert str(QPoly([0, -1, 0, 3])) == "-q+3q^3"
    assert str(ZERO) == "0"


def test_parse_examples():
    assert QPoly.parse("1+q+q^2") == QPoly([1, 1, 1])
    assert QPoly.parse("-2q^3+4") == QPoly([4, 0, 0, -2])
    with pytest.raises(ValueError):
        QPoly.parse("1+x")


def test_arithmetic_with_ints():
    assert (q + 1) * (q - 1) == q * q - ONE
    assert 3 - QPoly([3]) == ZERO
    assert (1 + q) ** 3 == QPoly([1, 3, 3, 1])


def test_first_negative():
    assert QPoly([1, 0, -2, -1]).first_negative() == (2, -2)
    assert QPoly([1, 1]).first_negative() is None


def test_from_powers_counts():
    assert from_powers([0, 2, 2, 1]) == QPoly([1, 1, 2])
    assert from_powers([]) == ZERO


def test_immutable():
    with pytest.raises(AttributeError):
        QPoly([1]).coeffs = (2,)


@given(polys)
def test_parse_roundtrip(p):
    assert QPoly.parse(str(p)) == p


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, polys, st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(polys, st.integers(0, 4))
def test_shift_is_multiplication_by_q_power(p, k):
    assert p.shift(k) == p * QPoly.monomial(k)
