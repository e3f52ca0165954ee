from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from operadlab.arith import (QQq, ZZ, Poly, format_poly, format_rational, parse_poly,
                             parse_rational, poly_divrem, poly_eval, poly_xgcd, q,
                             ring_from_name)


def test_poly_basics():
    p = q**2 - 3 * q + 1
    assert p.coeffs == (1, -3, 1)
    assert p.degree == 2 and p.lc == 1
    assert Poly().degree == -1
    assert not Poly() and Poly() == 0
    assert Poly.const(5) == 5
    assert (2 * q + 4).monic() == q + 2
    assert p(2) == -1


def test_divrem_oracle():
    assert poly_divrem(q**3 - 1, q - 1) == (q**2 + q + 1, Poly())
    quo, rem = poly_divrem(q**2 + 1, 2 * q)
    assert quo == Poly((0, Fraction(1, 2)))
    assert rem == 1
    with pytest.raises(ZeroDivisionError):
        poly_divrem(q, Poly())


def test_xgcd_oracle():
    f, g = q**2 - 1, q**2 + 2 * q + 1
    d, s, t = poly_xgcd(f, g)
    assert d == q + 1
    assert s * f + t * g == d
    assert poly_xgcd(Poly(), Poly()) == (Poly(), Poly(), Poly())


def test_degree_eight_vanishes_at_one():
    p = parse_poly("(-1/32768)*q^8 + (1/32768)")
    assert poly_eval(p, 1) == 0
    assert format_poly(parse_poly("(-1/32768)*q^8")) == "(-1/32768)*q^8"


@pytest.mark.parametrize("text", ["q^2 - 3*q + 1", "(-1/32768)*q^8", "-q + 1", "0", "q",
                                  "(3/2)*q^3 - 7", "-5"])
def test_poly_grammar_round_trip(text):
    assert format_poly(parse_poly(text)) == text


def test_rational_text():
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational("-3/2") == Fraction(-3, 2)
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_poly("q^^2")


def test_ring_lookup():
    assert ring_from_name("Z") is ZZ
    assert ring_from_name("Q[q]") is QQq
    with pytest.raises(ValueError):
        ring_from_name("R")


def test_integer_ring_ops():
    assert ZZ.divmod(-7, 2) == (-4, 1)
    d, s, t = ZZ.xgcd(12, -18)
    assert d == 6 and 12 * s - 18 * t == 6
    assert ZZ.normal_unit(-3) == -1
    assert ZZ.reduce(7, 3) == 2
    assert 7 - ZZ.reduce(7, 3) * 3 == 1
    assert ZZ.convert(Fraction(4, 2)) == 2
    with pytest.raises(TypeError):
        ZZ.convert(Fraction(1, 2))


def test_polynomial_ring_ops():
    assert QQq.normal_unit(-2 * q + 1) == Fraction(-1, 2)
    assert QQq.norm(q**3) == 3
    assert q**2 - QQq.reduce(q**2, q + 1) * (q + 1) == 1
    assert QQq.evaluate(q + 3, 1) == 4
    assert QQq.parse(QQq.format(q - 1)) == q - 1


fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fracs, max_size=4).map(Poly)


@settings(max_examples=1000, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if b:
        quo, rem = poly_divrem(a, b)
        assert quo * b + rem == a
        assert rem.degree < b.degree
    d, s, t = poly_xgcd(a, b)
    assert s * a + t * b == d
    if d:
        assert d.lc == 1
        assert not poly_divrem(a, d)[1] and not poly_divrem(b, d)[1]


@settings(max_examples=1000, deadline=None)
@given(polys)
def test_coefficients_in_lowest_terms(p):
    for c in p.coeffs:
        assert isinstance(c, Fraction)
        assert c.denominator > 0
    if p:
        assert p.coeffs[-1] != 0
    assert parse_poly(format_poly(p)) == p
