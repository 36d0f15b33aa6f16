"""Classification of the unitary units of Lambda_n modulo t^k and ±t^k,
and the Z-disk counts they encode."""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .arith import factorint, prime_power, valuation
from .laurent import AlexanderPoly, LaurentPoly, recognize_quadratic
from .lambda_ring import (
    LambdaElement, class_representative, embed, from_quadint, is_unitary,
    scalar, t_image, t_shift_class, xi,
)
from .quadint import (
    ClassGroupData, QuadIdeal, SearchInconclusive, analyze_discriminant,
    class_number, fundamental_unit, ideal_order_in_class_group, xi_element,
)

CAVEAT = ("Counts assume the knot is Z-slice in the punctured CP^2; "
          "existence is not decided here.")

SHAPES = {1: "trivial", 2: "Z2", 4: "Z4"}


class BadShape(ValueError):
    pass


@dataclass
class PmVariant:
    finite: bool
    cardinality: Optional[int]
    group_shape: Optional[str]
    rank: int
    coset_reps: Optional[List[LambdaElement]] = None

    def to_json(self):
        return {
            "finite": self.finite,
            "cardinality": self.cardinality,
            "shape": self.group_shape,
            "rank": self.rank,
            "coset_reps": _reps_json(self.coset_reps),
        }


@dataclass
class UnitGroupStructure:
    n: int
    finite: bool
    cardinality: Optional[int]
    group_shape: Optional[str]
    rank: int
    generators: List[LambdaElement] = field(default_factory=list)
    coset_reps: Optional[List[LambdaElement]] = None
    pm_variant: Optional[PmVariant] = None
    saturation_s: Optional[int] = None
    class_data: Optional[ClassGroupData] = None
    provenance_flags: List[str] = field(default_factory=list)

    def to_json(self):
        return {
            "n": self.n,
            "finite": self.finite,
            "cardinality": self.cardinality,
            "shape": self.group_shape,
            "rank": self.rank,
            "generators": [g.to_json() for g in self.generators],
            "coset_reps": _reps_json(self.coset_reps),
            "pm": self.pm_variant.to_json() if self.pm_variant else None,
            "saturation_s": self.saturation_s,
            "class_number": self.class_data.h if self.class_data else None,
            "flags": list(self.provenance_flags),
            "caveat": CAVEAT,
        }


def _reps_json(reps):
    return None if reps is None else [r.to_json() for r in reps]


def is_finite_case(n):
    if n in (2, 1, 0, -1):
        return True
    return n < 0 and prime_power(n) is not None


def rank_formula(n):
    """Rank of U(Lambda_n)/{t^k}; 0 in the finite cases."""
    if is_finite_case(n):
        return 0
    data = analyze_discriminant(n)
    if data.irreducible and n > 0:
        return data.omega_n
    return data.omega_n - 1


# --------------------------------------------------------------------------
# finite cases


def _finite_structure(n, data):
    one = scalar(1, data)
    if n in (0, -1):
        reps = [one]
    elif n in (1, 2):
        reps = [one, -one]
    else:
        p, k = prime_power(n)
        if k % 2:
            reps = [one, -one]
        else:
            g = xi(data) * LambdaElement(data, Fraction(1, p ** (k // 2)), 0)
            reps = [one, g, -one, -g]
    card = len(reps)
    if n == -1 or card == 1:
        pm = PmVariant(True, 1, "trivial", 0, [one])
    elif card == 2:
        pm = PmVariant(True, 1, "trivial", 0, [one])
    else:
        pm = PmVariant(True, 2, "Z2", 0, [one, reps[1]])
    return UnitGroupStructure(n, True, card, SHAPES[card], 0,
                              generators=[reps[1]] if card > 1 else [],
                              coset_reps=reps, pm_variant=pm)


# --------------------------------------------------------------------------
# infinite cases: best-effort free generators


def _into_xi_order(z, data, cap=10_000):
    """Least power of z (in Q(sqrt d)) that lies in Z[1/n, xi], as a LambdaElement."""
    w = z
    for g in range(1, cap + 1):
        try:
            return from_quadint(w, data), g
        except ValueError:
            w = w * z
    raise SearchInconclusive("no power of the generator lies in Z[1/n, xi]")


def _irreducible_generators(data, flags):
    n = data.n
    d = data.d
    cls = class_number(d)
    if cls.h is None:
        flags.append("class_number_unknown")
    xi_w = xi_element(data)
    candidates = []
    orders = []
    for p in sorted(factorint(n)):
        P = QuadIdeal.generated_by(d, p, xi_w)
        try:
            s, pi = ideal_order_in_class_group(P, cls.h)
        except SearchInconclusive:
            flags.append(f"principality_inconclusive_p{p}")
            if cls.h is not None:
                # P^h is always principal, so h is a valid exponent
                orders.append(cls.h)
                flags.append("saturation_fallback_h")
            continue
        orders.append(s)
        gamma = pi / pi.conj()
        elem, _ = _into_xi_order(gamma, data)
        candidates.append((p, elem))
    unit_part = None
    if d > 0:
        eps = fundamental_unit(d)
        eta = eps if eps.norm() == 1 else eps * eps
        unit_part, _ = _into_xi_order(eta, data)
    # t has nonzero valuation at every prime over n, so dropping one prime
    # candidate leaves a set independent modulo t
    gens = [e for _, e in candidates[:-1]] if len(candidates) == data.omega_n else \
        [e for _, e in candidates]
    if unit_part is not None:
        gens.append(unit_part)
    return gens, orders, cls


def _reducible_generators(data):
    m = data.m
    n = data.n
    mod = 2 * m + 1
    gens = []
    for p in sorted(factorint(n))[:-1]:
        g = 1
        while (p ** (2 * g) - 1) % mod:
            g += 1
        x = Fraction(p ** g)
        gens.append(LambdaElement(data, x, 1 / x))
    return gens


def _lcm(values):
    out = 1
    for v in values:
        out = out * v // _gcd(out, v)
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def classify(n):
    """Structure of U(Lambda_n)/{t^k}."""
    data = analyze_discriminant(n)
    if is_finite_case(n):
        out = _finite_structure(n, data)
        if n < -1:
            cls = class_number(data.d)
            out.class_data = cls
            p, _ = prime_power(n)
            P = QuadIdeal.generated_by(data.d, p, xi_element(data))
            out.saturation_s, _ = ideal_order_in_class_group(P, cls.h)
        return out
    rank = rank_formula(n)
    flags = ["generators_best_effort"]
    if data.reducible:
        gens = _reducible_generators(data)
        cls, sat = None, None
    else:
        gens, orders, cls = _irreducible_generators(data, flags)
        sat = _lcm(orders) if orders else None
    gens = [class_representative(g) for g in gens]
    if len(gens) != rank:
        flags.append("generators_incomplete")
    pm = PmVariant(False, None, None, rank, None)
    return UnitGroupStructure(n, False, None, None, rank, generators=gens,
                              pm_variant=pm, saturation_s=sat, class_data=cls,
                              provenance_flags=flags)


def classify_pm(n):
    """Structure of U(Lambda_n)/{±t^k}."""
    return classify(n).pm_variant


def fourdistinct_classes(n):
    k = _neg_square_root(n)
    if k is None or k <= 1:
        raise BadShape(f"n = {n} is not -k^2 with k > 1")
    data = analyze_discriminant(n)
    kt = LaurentPoly({1: k, 0: -k})
    one = LaurentPoly({0: 1})
    return [embed(one, data), embed(-one, data), embed(kt, data), embed(-kt, data)]


def _neg_square_root(n):
    if n >= 0:
        return None
    import math
    k = math.isqrt(-n)
    return k if k * k == -n else None


def pm_one_same_class(n):
    data = analyze_discriminant(n)
    one = scalar(1, data)
    return t_shift_class(one, -one, "t_only") is not None


def generators_independent(gens, box=3):
    """No nontrivial product of gens with exponents in [-box, box] is ±t^j."""
    if not gens:
        return True
    data = gens[0].ctx
    one = scalar(1, data)
    for exps in itertools.product(range(-box, box + 1), repeat=len(gens)):
        if not any(exps):
            continue
        x = one
        for g, e in zip(gens, exps):
            x = x * g ** e
        if t_shift_class(x, one, "plus_minus_t") is not None:
            return False
    return True


# --------------------------------------------------------------------------
# disk counts


INFINITE = "infinite"
UNSUPPORTED = "unsupported"


@dataclass
class DiskCountReport:
    alexander: AlexanderPoly
    n: Optional[int]
    isotopy_count: object
    equivalence_count: object
    rank: Optional[int] = None
    note: Optional[str] = None
    caveat: str = CAVEAT

    def to_json(self):
        return {
            "alexander": str(self.alexander),
            "n": self.n,
            "isotopy_count": self.isotopy_count,
            "equivalence_count": self.equivalence_count,
            "rank": self.rank,
            "note": self.note,
            "caveat": self.caveat,
        }


def disk_count(p):
    n = recognize_quadratic(p)
    if n is None:
        return DiskCountReport(
            p, None, UNSUPPORTED, UNSUPPORTED,
            note="not of the form n t - (2n+1) + n/t; the existence test "
                 "(algebraic unknotting number) is not computed here")
    s = classify(n)
    if s.finite:
        return DiskCountReport(p, n, s.cardinality, s.pm_variant.cardinality, 0)
    return DiskCountReport(p, n, INFINITE, INFINITE, s.rank)
