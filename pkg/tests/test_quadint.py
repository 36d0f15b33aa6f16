import math
import pytest
from hypothesis import given, strategies as st

from zdisk.arith import is_prime, prime_power
from zdisk.quadint import (
    QuadIdeal, QuadIntElement, analyze_discriminant, class_number,
    factor_n_ideal, fundamental_unit, is_principal, omega_element,
    principal_ideal, splitting_type, xi_element,
)

D_LIST = (-119, -15, -7, 5, 21)
PRIMES = [p for p in range(2, 200) if is_prime(p)]


def _roots(p, d):
    return sum(1 for r in range(p) if (r * r - r - (d - 1) // 4) % p == 0)


@pytest.mark.parametrize("d", D_LIST)
def test_splitting_matches_root_count(d):
    for p in PRIMES:
        want = {0: "inert", 1: "ramified", 2: "split"}[_roots(p, d)]
        assert splitting_type(p, d) == want, p


@pytest.mark.parametrize("d,h", [
    (-3, 1), (-7, 1), (-15, 2), (-23, 3), (-119, 10),
    (10, 2), (15, 2), (79, 3), (82, 4), (226, 8), (229, 3),
])
def test_class_numbers(d, h):
    assert class_number(d).h == h


@pytest.mark.parametrize("d,xy", [(2, (1, 1)), (5, (0, 1)), (13, (1, 1)), (61, (17, 5))])
def test_fundamental_unit_values(d, xy):
    e = fundamental_unit(d)
    assert (e.x, e.y) == xy
    assert abs(e.norm()) == 1


def _squarefree(d):
    return all(d % (q * q) for q in range(2, math.isqrt(d) + 1))


def _unit_with_coordinate(d, y):
    # some x makes x + y*omega (or x + y*sqrt(d)) a unit
    for s in (1, -1):
        if d % 4 == 1:
            disc = d * y * y + 4 * s
            r = math.isqrt(disc) if disc >= 0 else -1
            if r >= 0 and r * r == disc and (r - y) % 2 == 0:
                return True
        else:
            val = d * y * y + s
            r = math.isqrt(val) if val >= 0 else -1
            if r >= 0 and r * r == val:
                return True
    return False


@pytest.mark.parametrize("d", [d for d in range(2, 100) if _squarefree(d)])
def test_fundamental_unit_is_minimal(d):
    # the fundamental unit has the least positive second coordinate among units
    e = fundamental_unit(d)
    assert e.y > 0 and float(e.embed(30)) > 1
    assert _unit_with_coordinate(d, int(e.y))
    assert not any(_unit_with_coordinate(d, y) for y in range(1, int(e.y)))


ints = st.integers(-20, 20)


@given(ints, ints, ints, ints, st.sampled_from(D_LIST))
def test_norm_multiplicative(a, b, c, e, d):
    w = omega_element(d)
    x, y = a + b * w, c + e * w
    assert (x * y).norm() == x.norm() * y.norm()
    assert (x * y).conj() == x.conj() * y.conj()


@given(ints, ints, st.sampled_from(D_LIST))
def test_element_json_roundtrip(a, b, d):
    x = a + b * omega_element(d)
    assert QuadIntElement.from_json(x.to_json()) == x


@pytest.mark.parametrize("q,p,k", [
    (q, *prime_power(q)) for q in range(2, 65) if prime_power(q)])
def test_ideal_relations(q, p, k):
    data = analyze_discriminant(-q)
    xi = xi_element(data)
    P1 = QuadIdeal.generated_by(data.d, p, xi)
    P2 = QuadIdeal.generated_by(data.d, p, xi.conj())
    assert P1 * P2 == principal_ideal(0 * xi + p)
    assert P1 ** k == principal_ideal(xi)
    assert P2 ** k == principal_ideal(xi.conj())
    assert P1.norm() == P2.norm() == p


def test_factor_n_ideal_product():
    for n in (-6, -15, 3, 5, 10):
        data = analyze_discriminant(n)
        prod = QuadIdeal.unit(data.d)
        for P, e in factor_n_ideal(data):
            prod = prod * P ** e
        assert prod == principal_ideal(xi_element(data)) * principal_ideal(xi_element(data).conj()), n


def test_principality():
    # h(-15) = 2: primes above 2 are not principal, their squares are
    d = -15
    P = QuadIdeal.generated_by(d, 2, omega_element(d))
    assert is_principal(P) is None
    gen = is_principal(P * P)
    assert gen is not None and principal_ideal(gen) == P * P
    d = 10
    P = QuadIdeal.generated_by(d, 3, 1 + omega_element(d))
    assert is_principal(P) is None
    gen = is_principal(P * P)
    assert gen is not None and principal_ideal(gen) == P * P


def test_ideal_json():
    I = QuadIdeal.generated_by(-7, 2, omega_element(-7))
    assert I.to_json() == {"a": I.a, "b": I.b, "g": I.g, "d": -7}
