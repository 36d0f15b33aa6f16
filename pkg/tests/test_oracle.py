import itertools

import numpy as np
import pytest

from zdisk.laurent import LaurentPoly, delta_n, parse_poly
from zdisk.lambda_ring import analyze_discriminant, embed, is_unitary
from zdisk.oracle import (
    DisjointSet, OracleConfig, count_classes, divides_exactly,
    divides_exactly_batch, enumerate_unitary, run_oracle,
)


def _brute_units(n, D, C):
    ctx = analyze_discriminant(n)
    out = set()
    for coeffs in itertools.product(range(-C, C + 1), repeat=2 * D + 1):
        p = LaurentPoly.from_coeffs(list(coeffs), -D)
        if not p.is_zero() and is_unitary(embed(p, ctx)):
            out.add(p)
    return out


@pytest.mark.parametrize("n", [-4, -2, -1, 1, 3])
def test_enumeration_matches_brute_force(n):
    cfg = OracleConfig(1, 2, 4)
    got = set(enumerate_unitary(n, cfg))
    assert got == _brute_units(n, 1, 2)


def test_divisibility():
    assert divides_exactly(delta_n(-1), parse_poly("t^3+1"))
    assert not divides_exactly(delta_n(-2), parse_poly("t^3+1"))
    with pytest.raises(ZeroDivisionError):
        divides_exactly(LaurentPoly({}), parse_poly("t"))


def test_batch_divisibility_agrees():
    rng = np.random.default_rng(7)
    d = delta_n(-3)
    Q = rng.integers(-5, 6, size=(300, 6))
    # plant exact multiples
    mult = np.array([[-3 * a, 5 * a - 3 * b, -3 * a + 5 * b, -3 * b, 0, 0]
                     for a, b in rng.integers(-3, 4, size=(100, 2))])
    Q = np.vstack([Q, mult])
    got = divides_exactly_batch(d, Q)
    want = [divides_exactly(d, LaurentPoly.from_coeffs(list(map(int, r)), 0)) for r in Q]
    assert list(got) == want
    assert got[300:].all()


def test_disjoint_set():
    ds = DisjointSet(5)
    assert ds.union(0, 1) and ds.union(3, 4) and not ds.union(1, 0)
    assert ds.find(0) == ds.find(1) != ds.find(3)


@pytest.mark.parametrize("n,count,pm", [(-4, 4, 2), (-3, 2, 1), (2, 2, 1)])
def test_small_box_counts(n, count, pm):
    r = run_oracle(n, OracleConfig(2, 4, 8))
    assert r.count == count and r.complete_within_bounds
    assert run_oracle(n, OracleConfig(2, 4, 8, mode="plus_minus_t")).count == pm


def test_infinite_case_is_lower_bound():
    r = run_oracle(3, OracleConfig(2, 3, 6))
    assert not r.complete_within_bounds
    assert r.count >= 2
    assert r.to_json()["complete_within_bounds"] is False


def test_count_classes_accepts_polys():
    units = [parse_poly("1"), parse_poly("-1"), parse_poly("t"), parse_poly("-t^2")]
    r = count_classes(units, -2, OracleConfig(2, 2, 4), expected=False)
    assert r.count == 2


def test_threads_agree():
    a = run_oracle(-4, OracleConfig(2, 4, 8))
    b = run_oracle(-4, OracleConfig(2, 4, 8, threads=4))
    assert a.to_json() | {"config": None} == b.to_json() | {"config": None}


@pytest.mark.parametrize("bad", [
    dict(degree_bound=0), dict(coeff_bound=-1), dict(mode="x"), dict(threads=0)])
def test_config_validation(bad):
    with pytest.raises(ValueError):
        OracleConfig(**bad)


def test_zero_rejected():
    with pytest.raises(ValueError):
        enumerate_unitary(0)
