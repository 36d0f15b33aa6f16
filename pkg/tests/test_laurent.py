import pytest
from hypothesis import given, strategies as st

from zdisk.laurent import (
    AlexanderPoly, LaurentPoly, NormalizationError, delta_n, divmod_poly,
    exact_quotient, format_poly, normalize_alexander, parse_poly,
    recognize_quadratic, t,
)

polys = st.dictionaries(st.integers(-4, 4), st.integers(-9, 9), max_size=6).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPoly({})


@given(polys, polys)
def test_involution_is_ring_automorphism(p, q):
    assert p.involute().involute() == p
    assert (p * q).involute() == p.involute() * q.involute()
    assert (p + q).involute() == p.involute() + q.involute()


@given(polys)
def test_format_parse_roundtrip(p):
    assert parse_poly(format_poly(p)) == p


@pytest.mark.parametrize("text,expected", [
    ("-2*t+3-2*t^-1", {1: -2, 0: 3, -1: -2}),
    ("2t", {1: 2}),
    ("t^2", {2: 1}),
    ("−t + 1", {1: -1, 0: 1}),
    ("0", {}),
])
def test_parse(text, expected):
    assert parse_poly(text) == LaurentPoly(expected)


@pytest.mark.parametrize("bad", ["", "t^^", "2 3", "t*"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_poly(bad)


def test_format_examples():
    assert format_poly(delta_n(-2).poly) == "-2*t + 3 - 2*t^-1"
    assert format_poly(LaurentPoly({})) == "0"


@pytest.mark.parametrize("n", range(-6, 7))
def test_delta_n_is_normalized(n):
    d = delta_n(n)
    assert d.poly(1) == -1
    assert d.poly.is_symmetric()
    if n:
        assert recognize_quadratic(d.poly) == n


def test_normalize_up_to_units():
    p = delta_n(3).poly
    assert normalize_alexander(-(p.shift(4))) == delta_n(3)
    with pytest.raises(NormalizationError):
        normalize_alexander(LaurentPoly({0: 1, 1: 1}))
    with pytest.raises(NormalizationError):
        AlexanderPoly(LaurentPoly({0: 2}))


def test_recognize_rejects_other_shapes():
    assert recognize_quadratic(parse_poly("t^2 - t + 1 - t^-1 + t^-2")) is None
    assert recognize_quadratic(parse_poly("t^2+1")) is None


def test_long_division():
    d = delta_n(-1).poly
    q = exact_quotient(parse_poly("t^3+1"), d)
    assert q * d == parse_poly("t^3+1")
    assert divmod_poly(parse_poly("t^3+2"), d)[1] != LaurentPoly({})
    with pytest.raises(ValueError):
        exact_quotient(parse_poly("t"), parse_poly("2t+1"))


def test_unit_powers():
    assert t ** -2 * t ** 2 == LaurentPoly({0: 1})
    with pytest.raises(ValueError):
        parse_poly("t+1") ** -1
