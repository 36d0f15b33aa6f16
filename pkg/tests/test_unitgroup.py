import json
import math
from pathlib import Path

import pytest

from zdisk.arith import omega
from zdisk.laurent import delta_n, parse_poly
from zdisk.lambda_ring import is_unitary, t_shift_class
from zdisk.unitgroup import (
    BadShape, INFINITE, UNSUPPORTED, classify, classify_pm, disk_count,
    fourdistinct_classes, generators_independent, is_finite_case,
    pm_one_same_class, rank_formula,
)

GOLDEN = Path(__file__).parent / "golden"

TABLE = [
    (-30, None, 2), (-9, "Z4", 0), (-8, "Z2", 0), (-6, None, 1), (-5, "Z2", 0),
    (-4, "Z4", 0), (-3, "Z2", 0), (-2, "Z2", 0), (-1, "trivial", 0),
    (0, "trivial", 0), (1, "Z2", 0), (2, "Z2", 0), (3, None, 1), (5, None, 1),
    (6, None, 1), (12, None, 1),
]


@pytest.mark.parametrize("n,shape,rank", TABLE)
def test_classification_table(n, shape, rank):
    s = classify(n)
    assert s.finite is (shape is not None)
    assert s.group_shape == shape
    assert s.rank == rank


@pytest.mark.parametrize("n", [-27, -25, -49, -32, -7, -11, -121])
def test_prime_power_parity(n):
    s = classify(n)
    assert s.group_shape == ("Z4" if _k_even(n) else "Z2")
    assert classify_pm(n).cardinality == (2 if _k_even(n) else 1)


def _k_even(n):
    from zdisk.arith import prime_power
    return prime_power(-n)[1] % 2 == 0


@pytest.mark.parametrize("n", range(-40, 41))
def test_rank_formula_matches_omega(n):
    if is_finite_case(n):
        assert rank_formula(n) == 0
        return
    disc = 4 * n + 1
    reducible = disc > 0 and math.isqrt(disc) ** 2 == disc
    want = omega(n) if (n > 0 and not reducible) else omega(n) - 1
    assert rank_formula(n) == want


@pytest.mark.parametrize("n", [-9, -8, -4, -3, -2, -1, 1, 2, 0])
def test_coset_reps_are_unitary_and_distinct(n):
    s = classify(n)
    assert len(s.coset_reps) == s.cardinality
    if n == 0:
        return
    for x in s.coset_reps:
        assert is_unitary(x)
    for i, x in enumerate(s.coset_reps):
        for y in s.coset_reps[i + 1:]:
            assert t_shift_class(x, y) is None


@pytest.mark.parametrize("n", [-4, -9, -25, -49])
def test_four_distinct(n):
    four = fourdistinct_classes(n)
    for i, x in enumerate(four):
        for y in four[i + 1:]:
            assert t_shift_class(x, y) is None
    for r in classify(n).coset_reps:
        assert sum(t_shift_class(r, x) is not None for x in four) == 1


@pytest.mark.parametrize("n", [-3, 5, -1])
def test_four_distinct_rejects(n):
    with pytest.raises(BadShape):
        fourdistinct_classes(n)


def test_pm_one():
    assert pm_one_same_class(-1)
    assert not pm_one_same_class(-2)


@pytest.mark.parametrize("n", [-30, -6, 3, 5, 6, 12, 7, -15])
def test_generators(n):
    s = classify(n)
    assert all(is_unitary(g) for g in s.generators)
    assert "generators_best_effort" in s.provenance_flags
    if len(s.generators) == s.rank:
        assert generators_independent(s.generators)


def test_disk_counts():
    r = disk_count(parse_poly("-2*t+3-2*t^-1"))
    assert (r.n, r.isotopy_count, r.equivalence_count) == (-2, 2, 1)
    assert disk_count(delta_n(-1).poly).isotopy_count == 1
    assert disk_count(delta_n(-9).poly).equivalence_count == 2
    r = disk_count(delta_n(6).poly)
    assert (r.isotopy_count, r.rank) == (INFINITE, 1)
    assert disk_count(parse_poly("t^2+1")).isotopy_count == UNSUPPORTED
    assert "caveat" in r.to_json()


@pytest.mark.parametrize("n", [-9, -6, 0, 1, 6])
def test_golden_json(n):
    # frozen outputs of the current build; regenerate deliberately if conventions change
    got = json.loads(json.dumps(classify(n).to_json(), sort_keys=True))
    want = json.loads((GOLDEN / f"classify_{n}.json").read_text())
    assert got == want
