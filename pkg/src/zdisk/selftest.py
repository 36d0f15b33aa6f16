"""Acceptance checks shared by ``zdisk selftest`` and the test suite.

Each check returns a CheckResult; nothing here raises on a failed check.
"""

import itertools
import random
import time
from dataclasses import dataclass

from .laurent import LaurentPoly, delta_n, parse_poly
from .lambda_ring import (
    analyze_discriminant, conj, embed, inverse, is_unitary, lambda_norm, scalar,
    t_shift_class,
)
from .oracle import OracleConfig, divides_exactly, run_oracle
from .quadint import (
    QuadIdeal, class_number, fundamental_unit, principal_ideal, splitting_type,
    xi_element,
)
from .unitgroup import classify, classify_pm, fourdistinct_classes
from .knots import five_crossing_table
from .arith import is_prime, prime_power


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name} ({self.seconds:.2f}s) {self.detail}".rstrip()


def _timed(name, fn):
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, reported inline
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, ok, detail, time.perf_counter() - t0)


GOLDEN = {
    -30: ("rank", 2), -9: ("Z4", 0), -8: ("Z2", 0), -6: ("rank", 1),
    -5: ("Z2", 0), -4: ("Z4", 0), -3: ("Z2", 0), -2: ("Z2", 0),
    -1: ("trivial", 0), 0: ("trivial", 0), 1: ("Z2", 0), 2: ("Z2", 0),
    3: ("rank", 1), 5: ("rank", 1), 6: ("rank", 1), 12: ("rank", 1),
}

ORACLE_NS = (-9, -8, -4, -3, -2, -1, 1, 2)
CARD = {"trivial": 1, "Z2": 2, "Z4": 4}


def _shape(s):
    return ("rank", s.rank) if not s.finite else (s.group_shape, 0)


def golden_table():
    t0 = time.perf_counter()
    got = {n: _shape(classify(n)) for n in GOLDEN}
    elapsed = time.perf_counter() - t0
    bad = {n: g for n, g in got.items() if g != GOLDEN[n]}
    return not bad and elapsed < 1.0, f"mismatches={bad} runtime={elapsed:.3f}s (<1s)"


def oracle_agreement(cfg=OracleConfig(3, 6, 12)):
    t0 = time.perf_counter()
    bad = []
    for n in ORACLE_NS:
        r = run_oracle(n, cfg)
        want = CARD[GOLDEN[n][0]]
        if r.count != want or not r.complete_within_bounds:
            bad.append((n, r.count, want, r.complete_within_bounds))
    elapsed = time.perf_counter() - t0
    limit = 300.0 if cfg.threads == 1 else 60.0
    return not bad and elapsed < limit, f"mismatches={bad} runtime={elapsed:.1f}s (<{limit:.0f}s)"


PM_TABLE = {-4: 2, -2: 1, -1: 1, 1: 1, 2: 1}


def pm_table(cfg=OracleConfig(3, 6, 12, mode="plus_minus_t")):
    bad = []
    for n, want in PM_TABLE.items():
        c = classify_pm(n).cardinality
        o = run_oracle(n, cfg).count
        if c != want or o != want:
            bad.append((n, c, o, want))
    return not bad, f"mismatches={bad}"


def eisenstein_identity():
    divides = divides_exactly(delta_n(-1), parse_poly("t^3 + 1"))
    ctx = analyze_discriminant(-1)
    w = t_shift_class(scalar(1, ctx), scalar(-1, ctx))
    ok = divides and w is not None and w.exponent == 3 and w.sign == 1
    return ok, f"divides={divides} witness={w}"


def prime_powers_up_to(bound):
    out = []
    for q in range(2, bound + 1):
        pk = prime_power(q)
        if pk is not None:
            out.append((q, *pk))
    return out


def ideal_identities(bound=64):
    bad = []
    for q, p, k in prime_powers_up_to(bound):
        data = analyze_discriminant(-q)
        d = data.d
        xi = xi_element(data)
        P1 = QuadIdeal.generated_by(d, p, xi)
        P2 = QuadIdeal.generated_by(d, p, xi.conj())
        checks = (
            P1 * P2 == principal_ideal(xi * 0 + p),
            P1 ** k == principal_ideal(xi),
            P2 ** k == principal_ideal(xi.conj()),
            P1.norm() == p and P2.norm() == p,
        )
        if not all(checks):
            bad.append((-q, checks))
    return not bad, f"n checked={len(prime_powers_up_to(bound))} failures={bad}"


def fourdistinct_suite(ns=(-4, -9, -25)):
    bad = []
    for n in ns:
        four = fourdistinct_classes(n)
        for x, y in itertools.combinations(four, 2):
            if t_shift_class(x, y) is not None:
                bad.append((n, "equivalent pair"))
        reps = classify(n).coset_reps
        for r in reps:
            hits = sum(t_shift_class(r, x) is not None for x in four)
            if hits != 1:
                bad.append((n, str(r), hits))
        if len(reps) != 4:
            bad.append((n, "coset count", len(reps)))
    return not bad, f"failures={bad}"


KNOT_EXPECTED = {"0_1": 1, "3_1": 1, "4_1": 2, "5_1": "unsupported", "5_2": 2}


def knot_table():
    rows = five_crossing_table()
    got = {r["name"]: r["isotopy_count"] for r in rows}
    return got == KNOT_EXPECTED, f"got={got}"


def _roots_mod_p(p, d):
    k = (d - 1) // 4
    return sum(1 for r in range(p) if (r * r - r - k) % p == 0)


def number_theory_spot_checks():
    bad = []
    for d, h in ((-3, 1), (-7, 1), (-15, 2)):
        got = class_number(d)
        if got.h != h or got.method != "reduced_forms":
            bad.append(("h", d, got.h))
    eps = fundamental_unit(5)
    if (eps.x, eps.y) != (0, 1):
        bad.append(("eps5", str(eps)))
    expected_type = {0: "inert", 1: None, 2: "split"}
    for d in (-119, -15, -7, 5, 21):
        for p in (q for q in range(2, 200) if is_prime(q)):
            roots = _roots_mod_p(p, d)
            want = "ramified" if roots == 1 else expected_type[roots]
            if splitting_type(p, d) != want:
                bad.append(("split", p, d))
    return not bad, f"failures={bad}"


def _random_poly(rng, span=3, coeff=5):
    return LaurentPoly({e: rng.randint(-coeff, coeff) for e in range(-span, span + 1)})


def property_suites(cases=500, seed=20261015):
    rng = random.Random(seed)
    failures = []
    for _ in range(cases):
        p, q, r = (_random_poly(rng) for _ in range(3))
        if (p + q) * r != p * r + q * r or p * (q * r) != (p * q) * r or p * q != q * p:
            failures.append(("ring", str(p), str(q)))
        if p.involute().involute() != p or (p * q).involute() != p.involute() * q.involute():
            failures.append(("involution", str(p)))
    for n in [k for k in range(-6, 7) if k]:
        ctx = analyze_discriminant(n)
        delta = delta_n(n).poly
        for i in range(cases):
            p = _random_poly(rng)
            q = p + delta * _random_poly(rng, 2, 3) if i % 2 else _random_poly(rng)
            a, b = embed(p, ctx), embed(q, ctx)
            if (a == b) != divides_exactly(delta, p - q):
                failures.append(("kernel", n, str(p), str(q)))
            if embed(p * q, ctx) != a * b or embed(p.involute(), ctx) != conj(a):
                failures.append(("hom", n, str(p)))
            if lambda_norm(a * b) != lambda_norm(a) * lambda_norm(b):
                failures.append(("norm", n, str(p)))
        T = embed(LaurentPoly({1: 1}), ctx)
        units = [T ** rng.randint(-4, 4) * rng.choice((1, -1)) for _ in range(30)]
        units += [u * inverse(v) for u, v in zip(units, units[1:])]
        for x, y, z in zip(units, units[1:], units[2:]):
            if not (is_unitary(x) and is_unitary(x * y) and is_unitary(inverse(x))):
                failures.append(("unitary", n))
            wxx = t_shift_class(x, x, "plus_minus_t")
            wxy = t_shift_class(x, y, "plus_minus_t")
            wyx = t_shift_class(y, x, "plus_minus_t")
            wyz = t_shift_class(y, z, "plus_minus_t")
            wxz = t_shift_class(x, z, "plus_minus_t")
            if wxx is None or (wxy is None) != (wyx is None) or None in (wxy, wyz, wxz):
                failures.append(("equivalence", n))
                continue
            if n != -1 and (wxy.exponent != -wyx.exponent or
                            wxz.exponent != wxy.exponent + wyz.exponent or
                            wxz.sign != wxy.sign * wyz.sign):
                failures.append(("witness", n))
    return not failures, f"failures={failures[:5]} (total {len(failures)})"


CRITERIA = [
    ("1 golden table", golden_table),
    ("2 oracle agreement", oracle_agreement),
    ("3 pm quotient table", pm_table),
    ("4 Eisenstein identity", eisenstein_identity),
    ("5 ideal identities", ideal_identities),
    ("6 four distinct classes", fourdistinct_suite),
    ("7 knot table", knot_table),
    ("8 number theory spot checks", number_theory_spot_checks),
    ("9 property suites", property_suites),
]


def run_all(skip=()):
    return [_timed(name, fn) for name, fn in CRITERIA if name.split()[0] not in skip]
