"""Quadratic orders Z[omega]: elements, HNF ideals, splitting, principality,
class numbers and fundamental units.

omega = (1 + sqrt d)/2 when d = 1 mod 4 and omega = sqrt d otherwise, so
omega^2 = omega + (d-1)/4, resp. omega^2 = d.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import mpmath

from .arith import factorint, is_square, sqrt_mod, squarefree_decomposition, valuation


class SearchInconclusive(RuntimeError):
    pass


class IterationLimit(RuntimeError):
    pass


MAX_CYCLE_STEPS = 200_000


# --------------------------------------------------------------------------
# discriminant data for Delta_n


@dataclass(frozen=True)
class DiscriminantData:
    n: int
    disc: int
    c: int
    d: int
    reducible: bool
    m: Optional[int]
    omega_n: int
    degenerate: bool = False

    @property
    def irreducible(self):
        return not self.reducible and not self.degenerate


def analyze_discriminant(n):
    """Decompose 4n + 1 = c^2 d and classify Delta_n as reducible or not."""
    disc = 4 * n + 1
    if n == 0:
        return DiscriminantData(n, disc, 1, 1, False, None, 0, degenerate=True)
    om = len(factorint(n))
    if is_square(disc):
        c = math.isqrt(disc)
        return DiscriminantData(n, disc, c, 1, True, (c - 1) // 2, om)
    c, d = squarefree_decomposition(disc)
    return DiscriminantData(n, disc, c, d, False, None, om)


# --------------------------------------------------------------------------
# elements


def _omega_k(d):
    return (d - 1) // 4


@dataclass(frozen=True)
class QuadIntElement:
    """x + y*omega with rational x, y in Q(sqrt d)."""

    x: Fraction
    y: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        if self.d in (0, 1) or not _squarefree(self.d):
            raise ValueError(f"d = {self.d} is not a squarefree integer != 0, 1")

    @property
    def integral(self):
        return self.x.denominator == 1 and self.y.denominator == 1

    def _wrap(self, other):
        if isinstance(other, QuadIntElement):
            if other.d != self.d:
                raise ValueError("mismatched fields")
            return other
        return QuadIntElement(Fraction(other), 0, self.d)

    def __add__(self, other):
        o = self._wrap(other)
        return QuadIntElement(self.x + o.x, self.y + o.y, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadIntElement(-self.x, -self.y, self.d)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        o = self._wrap(other)
        x1, y1, x2, y2 = self.x, self.y, o.x, o.y
        if self.d % 4 == 1:
            k = _omega_k(self.d)
            return QuadIntElement(x1 * x2 + k * y1 * y2,
                                  x1 * y2 + x2 * y1 + y1 * y2, self.d)
        return QuadIntElement(x1 * x2 + self.d * y1 * y2, x1 * y2 + x2 * y1, self.d)

    __rmul__ = __mul__

    def conj(self):
        if self.d % 4 == 1:
            return QuadIntElement(self.x + self.y, -self.y, self.d)
        return QuadIntElement(self.x, -self.y, self.d)

    def norm(self):
        if self.d % 4 == 1:
            return self.x * self.x + self.x * self.y - _omega_k(self.d) * self.y * self.y
        return self.x * self.x - self.d * self.y * self.y

    def trace(self):
        return (self + self.conj()).x

    def inverse(self):
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("zero has no inverse")
        c = self.conj()
        return QuadIntElement(c.x / nm, c.y / nm, self.d)

    def __truediv__(self, other):
        return self * self._wrap(other).inverse()

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        out = QuadIntElement(1, 0, self.d)
        k = abs(k)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self):
        return self.x == 0 and self.y == 0

    def embed(self, prec=128):
        """Value under sqrt(d) -> +sqrt(d) (real or complex) at the given bit precision."""
        with mpmath.workprec(prec):
            root = mpmath.sqrt(self.d) if self.d > 0 else mpmath.mpc(0, mpmath.sqrt(-self.d))
            w = (1 + root) / 2 if self.d % 4 == 1 else root
            return mpmath.mpf(self.x.numerator) / self.x.denominator + \
                (mpmath.mpf(self.y.numerator) / self.y.denominator) * w

    def to_json(self):
        return {"x": _fmt(self.x), "y": _fmt(self.y), "d": self.d}

    @classmethod
    def from_json(cls, obj):
        return cls(Fraction(obj["x"]), Fraction(obj["y"]), int(obj["d"]))

    def __str__(self):
        w = "omega" if self.d % 4 == 1 else f"sqrt({self.d})"
        return f"{self.x} + {self.y}*{w}"


def _fmt(q):
    return f"{q.numerator}/{q.denominator}"


def _squarefree(d):
    return all(e == 1 for e in factorint(d).values())


def omega_element(d):
    return QuadIntElement(0, 1, d)


def xi_element(data):
    """xi = (1 + c sqrt d)/2 written in the basis 1, omega of Z[omega]."""
    if not data.irreducible:
        raise ValueError("xi lives in Z[omega] only for irreducible Delta_n")
    return QuadIntElement(Fraction(1 - data.c, 2), data.c, data.d)


def norm(e):
    return e.norm()


def field_discriminant(d):
    return d if d % 4 == 1 else 4 * d


# --------------------------------------------------------------------------
# ideals


def _vec(z):
    if not z.integral:
        raise ValueError(f"{z} is not integral")
    return int(z.x), int(z.y)


def _hnf(vectors):
    """HNF (a, b, g) of the Z-span of integer vectors (x, y) ~ x + y*omega."""
    vectors = [v for v in vectors if v != (0, 0)]
    g, bx = 0, 0
    for x, y in vectors:
        # extended gcd on the omega-coordinate keeps (bx, g) in the span
        if y == 0:
            continue
        if g == 0:
            g, bx = y, x
            continue
        gg, s, t = _xgcd(g, y)
        g, bx = gg, s * bx + t * x
    if g == 0:
        raise ValueError("vectors do not span a full-rank lattice")
    if g < 0:
        g, bx = -g, -bx
    a = 0
    for x, y in vectors:
        a = math.gcd(a, x - (y // g) * bx)
    if a == 0:
        raise ValueError("vectors do not span a full-rank lattice")
    return a, bx % a, g


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


@dataclass(frozen=True)
class QuadIdeal:
    """The Z-module a*Z + (b + g*omega)*Z of Z[omega], in canonical HNF."""

    a: int
    b: int
    g: int
    d: int

    def __post_init__(self):
        a, b, g = self.a, self.b, self.g
        if a <= 0 or g <= 0 or not 0 <= b < a:
            raise ValueError(f"({a}, {b}, {g}) is not in canonical HNF")
        if a % g or b % g:
            raise ValueError(f"({a}, {b}, {g}) is not an ideal: g must divide a and b")
        nb = QuadIntElement(b, g, self.d).norm()
        if nb % (a * g):
            raise ValueError(f"({a}, {b}, {g}) is not an ideal: a*g does not divide N(b + g omega)")

    @classmethod
    def from_basis(cls, d, elements):
        return cls(*_hnf([_vec(z) for z in elements]), d)

    @classmethod
    def generated_by(cls, d, *gens):
        w = omega_element(d)
        elems = []
        for z in gens:
            z = z if isinstance(z, QuadIntElement) else QuadIntElement(z, 0, d)
            elems.extend((z, z * w))
        return cls.from_basis(d, elems)

    @classmethod
    def unit(cls, d):
        return cls(1, 0, 1, d)

    def basis(self):
        return (QuadIntElement(self.a, 0, self.d), QuadIntElement(self.b, self.g, self.d))

    def __mul__(self, other):
        return ideal_mul(self, other)

    def __pow__(self, k):
        out = QuadIdeal.unit(self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def norm(self):
        return self.a * self.g

    def conj(self):
        return QuadIdeal.from_basis(self.d, [z.conj() for z in self.basis()])

    def contains(self, z):
        x, y = _vec(z)
        if y % self.g:
            return False
        return (x - (y // self.g) * self.b) % self.a == 0

    def to_json(self):
        return {"a": self.a, "b": self.b, "g": self.g, "d": self.d}

    def __str__(self):
        return f"<{self.a}, {self.b} + {self.g}w>"


def ideal_mul(I, J):
    if I.d != J.d:
        raise ValueError("ideals from different orders")
    return QuadIdeal.from_basis(I.d, [u * v for u in I.basis() for v in J.basis()])


def ideal_norm(I):
    return I.norm()


def principal_ideal(z):
    return QuadIdeal.generated_by(z.d, z)


# --------------------------------------------------------------------------
# splitting of rational primes


def splitting_type(p, d):
    """'ramified', 'split' or 'inert' for the rational prime p in Z[omega]."""
    if field_discriminant(d) % p == 0:
        return "ramified"
    if p == 2:
        return "split" if d % 8 == 1 else "inert"
    return "split" if pow(d % p, (p - 1) // 2, p) == 1 else "inert"


def _min_poly_roots(p, d):
    """Roots mod p of omega's minimal polynomial."""
    if d % 4 == 1:
        k = _omega_k(d)
        if p < 50:
            return [r for r in range(p) if (r * r - r - k) % p == 0]
        s = sqrt_mod(d, p)
        if s is None:
            return []
        inv2 = (p + 1) // 2
        return sorted({(1 + s) * inv2 % p, (1 - s) * inv2 % p})
    if p < 50:
        return [r for r in range(p) if (r * r - d) % p == 0]
    s = sqrt_mod(d, p)
    return [] if s is None else sorted({s, (-s) % p})


def prime_ideals_over(p, d):
    roots = _min_poly_roots(p, d)
    if not roots:
        return [QuadIdeal.generated_by(d, p)]
    w = omega_element(d)
    return [QuadIdeal.generated_by(d, p, w - r) for r in roots]


def factor_n_ideal(data):
    """Prime-ideal factorization of (n) in Z[omega] as [(ideal, multiplicity)]."""
    if not data.irreducible:
        raise ValueError("factor_n_ideal needs an irreducible Delta_n")
    xi = xi_element(data)
    out = []
    for p, e in sorted(factorint(data.n).items()):
        kind = splitting_type(p, data.d)
        primes = prime_ideals_over(p, data.d)
        if kind == "split":
            primes.sort(key=lambda P: not P.contains(xi))
            out.extend((P, e) for P in primes)
        elif kind == "ramified":
            out.append((primes[0], 2 * e))
        else:
            out.append((primes[0], e))
    return out


# --------------------------------------------------------------------------
# binary quadratic forms


def _ideal_form(I):
    """Form N(x*a' + y*(b' + omega))/a' attached to the primitive part of I."""
    a, b = I.a // I.g, I.b // I.g
    if I.d % 4 == 1:
        return a, 2 * b + 1, (b * b + b - _omega_k(I.d)) // a
    return a, 2 * b, (b * b - I.d) // a


def _rho_shift(A, B, C, sD):
    """The s for which (C, -B + 2sC, ...) is normalized."""
    m = 2 * abs(C)
    if abs(C) > sD:
        # -|C| < B' <= |C|
        target = (-B) % m
        if target > abs(C):
            target -= m
    else:
        # largest B' < sqrt(D) with B' = -B mod 2|C|
        target = sD - ((sD + B) % m)
    return (target + B) // (2 * C)


def _rho(form, sD):
    A, B, C = form
    s = _rho_shift(A, B, C, sD)
    return (C, -B + 2 * s * C, A - B * s + C * s * s), s


def _is_reduced_indef(form, sD):
    A, B, _ = form
    return 0 < B <= sD and 2 * abs(A) - B <= sD and 2 * abs(A) + B > sD


def _evaluate(form, x, y):
    A, B, C = form
    return A * x * x + B * x * y + C * y * y


def _indefinite_unit_representation(form, D, max_steps=MAX_CYCLE_STEPS):
    """Find (x, y) with form(x, y) = ±1 by walking the reduction cycle."""
    sD = math.isqrt(D)
    M = (1, 0, 0, 1)
    cur = form
    start = None
    for _ in range(max_steps):
        if abs(cur[0]) == 1:
            x, y = M[0], M[2]
            assert abs(_evaluate(form, x, y)) == 1
            return x, y
        if _is_reduced_indef(cur, sD):
            if start is None:
                start = cur
            elif cur == start:
                return None
        cur, s = _rho(cur, sD)
        M = (M[1], -M[0] + s * M[1], M[3], -M[2] + s * M[3])
    raise SearchInconclusive("reduction cycle exceeded its step cap")


def reduced_forms_definite(D):
    """Primitive reduced positive definite forms of discriminant D < 0."""
    out = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if math.gcd(math.gcd(a, b), c) == 1:
                out.append((a, b, c))
        a += 1
    return out


def reduced_forms_indefinite(D):
    sD = math.isqrt(D)
    out = []
    for B in range(1, sD + 1):
        if (B - D) % 2:
            continue
        ac = (B * B - D) // 4
        for A in _divisors(abs(ac)):
            for sA in (A, -A):
                C = ac // sA
                f = (sA, B, C)
                if _is_reduced_indef(f, sD) and math.gcd(math.gcd(sA, B), C) == 1:
                    out.append(f)
    return out


def _divisors(k):
    small = [i for i in range(1, math.isqrt(k) + 1) if k % i == 0]
    return sorted(set(small + [k // i for i in small]))


@dataclass(frozen=True)
class ClassGroupData:
    d: int
    h: Optional[int]
    method: str  # "reduced_forms" | "bounded_search" | "unknown"


@lru_cache(maxsize=None)
def class_number(d):
    D = field_discriminant(d)
    if d < 0:
        return ClassGroupData(d, len(reduced_forms_definite(D)), "reduced_forms")
    try:
        sD = math.isqrt(D)
        forms = reduced_forms_indefinite(D)
        seen = set()
        cycles = 0
        for f in forms:
            if f in seen:
                continue
            cycles += 1
            cur = f
            steps = 0
            while cur not in seen:
                seen.add(cur)
                cur, _ = _rho(cur, sD)
                steps += 1
                if steps > MAX_CYCLE_STEPS:
                    raise IterationLimit("cycle too long")
        eps = fundamental_unit(d)
        h = cycles if eps.norm() == -1 else cycles // 2
        return ClassGroupData(d, h, "reduced_forms")
    except IterationLimit:
        return ClassGroupData(d, None, "unknown")


# --------------------------------------------------------------------------
# units


@lru_cache(maxsize=None)
def fundamental_unit(d, max_steps=MAX_CYCLE_STEPS):
    """Fundamental unit > 1 of Z[omega], d > 0, via continued fractions of omega."""
    if d <= 1:
        raise ValueError("fundamental_unit needs squarefree d > 1")
    if d % 4 == 1:
        P, Q = 1, 2
    else:
        P, Q = 0, 1
    sD = math.isqrt(d)
    hm2, hm1, km2, km1 = 0, 1, 1, 0
    for _ in range(max_steps):
        a = (P + sD) // Q
        h, k = a * hm1 + hm2, a * km1 + km2
        z = QuadIntElement(h - k, k, d) if d % 4 == 1 else QuadIntElement(h, k, d)
        if abs(z.norm()) == 1:
            return z
        hm2, hm1, km2, km1 = hm1, h, km1, k
        P = a * Q - P
        Q = (d - P * P) // Q
    raise IterationLimit(f"no unit within {max_steps} partial quotients for d = {d}")


def unit_torsion(d):
    if d >= 0:
        raise ValueError("unit_torsion is for imaginary quadratic d < 0")
    one = QuadIntElement(1, 0, d)
    if d == -1:
        i = QuadIntElement(0, 1, d)
        return [one, -one, i, -i]
    if d == -3:
        w = QuadIntElement(0, 1, d)
        w2 = w * w
        return [one, -one, w, -w, w2, -w2]
    return [one, -one]


# --------------------------------------------------------------------------
# principality


def is_principal(I, max_steps=MAX_CYCLE_STEPS):
    """A generator of I, or None when I is not principal."""
    d = I.d
    N = I.norm()
    if d < 0:
        # |y| <= sqrt(4N/|d|) bounds every element of norm N
        if d % 4 == 1:
            ymax = math.isqrt(4 * N // -d) + 1
            for y in range(-ymax, ymax + 1):
                rhs = 4 * N + d * y * y  # (2x + y)^2
                if rhs < 0:
                    continue
                s = math.isqrt(rhs)
                if s * s != rhs:
                    continue
                for u in {s, -s}:
                    if (u - y) % 2 == 0:
                        z = QuadIntElement((u - y) // 2, y, d)
                        if I.contains(z):
                            return z
        else:
            ymax = math.isqrt(N // -d) + 1
            for y in range(-ymax, ymax + 1):
                rhs = N + d * y * y
                if rhs < 0:
                    continue
                s = math.isqrt(rhs)
                if s * s == rhs:
                    for x in {s, -s}:
                        z = QuadIntElement(x, y, d)
                        if I.contains(z):
                            return z
        return None
    form = _ideal_form(I)
    rep = _indefinite_unit_representation(form, field_discriminant(d), max_steps)
    if rep is None:
        return None
    x, y = rep
    a, b = I.a // I.g, I.b // I.g
    z = QuadIntElement(I.g * (x * a + y * b), I.g * y, d)
    assert abs(z.norm()) == N and I.contains(z)
    return z


def ideal_order_in_class_group(I, h=None):
    """Least s >= 1 with I^s principal, and a generator of I^s."""
    if h is None:
        h = class_number(I.d).h
    cap = h if h is not None else 64
    J = I
    for s in range(1, cap + 1):
        z = is_principal(J)
        if z is not None:
            return s, z
        J = J * I
    raise SearchInconclusive(f"{I} not principal up to exponent {cap}")


def padic_valuation_q(q, p):
    q = Fraction(q)
    if q == 0:
        raise ValueError("valuation of 0")
    return valuation(q.numerator, p) - valuation(q.denominator, p)
