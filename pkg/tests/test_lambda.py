import random

import pytest
from hypothesis import given, strategies as st

from zdisk.laurent import LaurentPoly, delta_n, parse_poly
from zdisk.lambda_ring import (
    LambdaElement, analyze_discriminant, class_representative, conj, embed,
    from_json, inverse, is_unitary, lambda_norm, preimage, scalar, t_image,
    t_shift_class, xi,
)
from zdisk.oracle import divides_exactly

NS = [n for n in range(-6, 7) if n]
polys = st.dictionaries(st.integers(-3, 3), st.integers(-6, 6), max_size=5).map(LaurentPoly)


def _rand_poly(rng, span=3, c=5):
    return LaurentPoly({e: rng.randint(-c, c) for e in range(-span, span + 1)})


@pytest.mark.parametrize("n", NS)
def test_embed_kernel_is_delta(n):
    rng = random.Random(n)
    ctx = analyze_discriminant(n)
    delta = delta_n(n).poly
    assert embed(delta, ctx) == scalar(0, ctx)
    for i in range(500):
        p = _rand_poly(rng)
        q = p + delta * _rand_poly(rng, 2, 3) if i % 2 else _rand_poly(rng)
        assert (embed(p, ctx) == embed(q, ctx)) == divides_exactly(delta, p - q)


@pytest.mark.parametrize("n", NS)
@given(p=polys, q=polys)
def test_embed_is_involutive_homomorphism(n, p, q):
    ctx = analyze_discriminant(n)
    a, b = embed(p, ctx), embed(q, ctx)
    assert embed(p * q, ctx) == a * b
    assert embed(p + q, ctx) == a + b
    assert embed(p.involute(), ctx) == conj(a)
    assert lambda_norm(a * b) == lambda_norm(a) * lambda_norm(b)
    assert conj(conj(a)) == a


@pytest.mark.parametrize("n", NS)
@given(p=polys)
def test_preimage_roundtrip(n, p):
    ctx = analyze_discriminant(n)
    x = embed(p, ctx)
    assert embed(preimage(x), ctx) == x


@pytest.mark.parametrize("n", NS)
def test_t_is_unitary(n):
    ctx = analyze_discriminant(n)
    T = t_image(ctx)
    assert is_unitary(T)
    assert T * inverse(T) == scalar(1, ctx)
    assert T ** -3 == inverse(T) ** 3


def test_known_images():
    ctx = analyze_discriminant(-4)
    assert embed(parse_poly("2t-2"), ctx) == xi(ctx) * LambdaElement(ctx, -0.5, 0)
    assert is_unitary(embed(parse_poly("2t-2"), ctx))


def test_eisenstein_witness():
    ctx = analyze_discriminant(-1)
    w = t_shift_class(scalar(1, ctx), scalar(-1, ctx))
    assert w.exponent == 3 and w.sign == 1


@pytest.mark.parametrize("n", NS)
def test_shift_laws(n):
    rng = random.Random(100 + n)
    ctx = analyze_discriminant(n)
    T = t_image(ctx)
    for _ in range(20):
        j, k = rng.randint(-5, 5), rng.randint(-5, 5)
        u = T ** k * rng.choice((1, -1))
        v = u * T ** j
        w = t_shift_class(u, v, "plus_minus_t")
        assert w is not None
        assert v * T ** w.exponent * w.sign == u
        assert t_shift_class(v, u, "plus_minus_t") is not None
        assert class_representative(u, "plus_minus_t") == class_representative(v, "plus_minus_t")


def test_inequivalent_reps():
    ctx = analyze_discriminant(-2)
    assert t_shift_class(scalar(1, ctx), scalar(-1, ctx)) is None
    assert t_shift_class(scalar(1, ctx), scalar(-1, ctx), "plus_minus_t") is not None


@pytest.mark.parametrize("n", [-9, 6, 2])
def test_json_roundtrip(n):
    ctx = analyze_discriminant(n)
    x = embed(parse_poly("3t^2 - t + 4"), ctx)
    assert from_json(x.to_json()) == x
    assert x.to_json()["n"] == n


def test_rejects_bad_coordinates():
    with pytest.raises(ValueError):
        LambdaElement(analyze_discriminant(-4), 1, "1/3")
    with pytest.raises(ValueError):
        LambdaElement(analyze_discriminant(6), 0, 1)
    # Lambda_0 is the zero ring
    assert scalar(1, analyze_discriminant(0)) == scalar(0, analyze_discriminant(0))
