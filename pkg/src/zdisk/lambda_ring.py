"""The quotient ring Lambda_n = Z[t, 1/t]/(Delta_n) in exact coordinates.

Irreducible Delta_n: elements are u + v*xi in Z[1/n, xi], xi^2 = xi + n,
with t -> 1 + xi/n.  Reducible Delta_n (n = m(m+1)): elements are pairs
(a, b) in Z[1/n] + Z[1/n] with t -> (m/(m+1), (m+1)/m).  Both maps are
injective on Lambda_n, so coordinates decide equality.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from .arith import factorint, valuation
from .laurent import LaurentPoly
from .localized import in_S, is_supported, is_unit, ReduciblePair, format_rational
from .quadint import DiscriminantData, QuadIntElement, analyze_discriminant


class PrecisionEscalation(RuntimeError):
    pass


MAX_PREC = 4096


@dataclass(frozen=True)
class LambdaElement:
    ctx: DiscriminantData
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        ctx = self.ctx
        if ctx.degenerate:
            if self.a or self.b:
                raise ValueError("the ring Lambda_0 is trivial")
        elif ctx.reducible:
            if not in_S(ReduciblePair(self.a, self.b, ctx.m)):
                raise ValueError(f"({self.a}, {self.b}) is not in the image subring S")
        elif not (is_supported(self.a, ctx.n) and is_supported(self.b, ctx.n)):
            raise ValueError(f"coordinates ({self.a}, {self.b}) not in Z[1/{ctx.n}]")

    @property
    def n(self):
        return self.ctx.n

    @property
    def case(self):
        if self.ctx.degenerate:
            return "trivial"
        return "reducible" if self.ctx.reducible else "irreducible"

    @property
    def coords(self):
        return (self.a, self.b)

    def _new(self, a, b):
        if self.ctx.degenerate:
            return LambdaElement(self.ctx, 0, 0)
        return LambdaElement(self.ctx, a, b)

    def _same(self, other):
        if isinstance(other, int):
            return scalar(other, self.ctx)
        if not isinstance(other, LambdaElement):
            return NotImplemented
        if other.ctx.n != self.ctx.n:
            raise ValueError("elements of different rings")
        return other

    def __add__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        return self._new(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self.a, -self.b)

    def __sub__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        return self._new(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        return lambda_mul(self, o)

    __rmul__ = __mul__

    def __pow__(self, k):
        base = self if k >= 0 else inverse(self)
        out = scalar(1, self.ctx)
        k = abs(k)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self):
        return conj(self)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def to_json(self):
        return {"n": self.n, "case": self.case,
                "coords": [format_rational(self.a), format_rational(self.b)]}

    def __str__(self):
        if self.case != "irreducible":
            return f"({self.a}, {self.b})"
        if self.b == 0:
            return str(self.a)
        coef = {1: "", -1: "-"}.get(self.b, f"({self.b})*")
        if self.a == 0:
            return f"{coef}xi"
        sign = "-" if self.b < 0 else "+"
        coef = {1: "", -1: ""}.get(self.b, f"({abs(self.b)})*")
        return f"{self.a} {sign} {coef}xi"


def from_json(obj):
    ctx = analyze_discriminant(int(obj["n"]))
    a, b = (Fraction(c) for c in obj["coords"])
    return LambdaElement(ctx, a, b)


def _ctx(ctx):
    return ctx if isinstance(ctx, DiscriminantData) else analyze_discriminant(ctx)


def scalar(k, ctx):
    ctx = _ctx(ctx)
    if ctx.degenerate:
        return LambdaElement(ctx, 0, 0)
    if ctx.reducible:
        return LambdaElement(ctx, k, k)
    return LambdaElement(ctx, k, 0)


def xi(ctx):
    ctx = _ctx(ctx)
    if not ctx.irreducible:
        raise ValueError("xi is defined for irreducible Delta_n only")
    return LambdaElement(ctx, 0, 1)


def t_image(ctx):
    ctx = _ctx(ctx)
    if ctx.degenerate:
        return LambdaElement(ctx, 0, 0)
    if ctx.reducible:
        m = ctx.m
        return LambdaElement(ctx, Fraction(m, m + 1), Fraction(m + 1, m))
    return LambdaElement(ctx, 1, Fraction(1, ctx.n))


def lambda_mul(x, y):
    if x.ctx.degenerate:
        return x
    if x.ctx.reducible:
        return LambdaElement(x.ctx, x.a * y.a, x.b * y.b)
    n = x.ctx.n
    return LambdaElement(x.ctx, x.a * y.a + n * x.b * y.b,
                         x.a * y.b + x.b * y.a + x.b * y.b)


def conj(x):
    if x.ctx.degenerate:
        return x
    if x.ctx.reducible:
        return LambdaElement(x.ctx, x.b, x.a)
    # conj(xi) = 1 - xi
    return LambdaElement(x.ctx, x.a + x.b, -x.b)


def lambda_norm(x):
    return lambda_mul(x, conj(x))


def scalar_norm(x):
    """u^2 + uv - n v^2 for irreducible coordinates."""
    return x.a * x.a + x.a * x.b - x.ctx.n * x.b * x.b


def is_unit(x):
    ctx = x.ctx
    if ctx.degenerate:
        return True
    if ctx.reducible:
        return is_unit_q(x.a, ctx.n) and is_unit_q(x.b, ctx.n)
    nm = scalar_norm(x)
    return nm != 0 and is_unit_q(nm, ctx.n)


def is_unit_q(q, n):
    from .localized import is_unit as _unit
    return _unit(q, n)


def inverse(x):
    ctx = x.ctx
    if ctx.degenerate:
        return x
    if ctx.reducible:
        return LambdaElement(ctx, 1 / x.a, 1 / x.b)
    nm = scalar_norm(x)
    if nm == 0:
        raise ZeroDivisionError("zero is not invertible")
    c = conj(x)
    return LambdaElement(ctx, c.a / nm, c.b / nm)


def is_unitary(x):
    return lambda_norm(x) == scalar(1, x.ctx)


def embed(p, ctx):
    """Image of a Laurent polynomial in Lambda_n."""
    ctx = _ctx(ctx)
    if ctx.degenerate:
        return LambdaElement(ctx, 0, 0)
    T = t_image(ctx)
    Tinv = conj(T)
    pos = {e: c for e, c in p.items() if e >= 0}
    neg = {-e: c for e, c in p.items() if e < 0}
    return _horner(pos, T, ctx) + _horner(neg, Tinv, ctx)


def _horner(coeffs, x, ctx):
    if not coeffs:
        return scalar(0, ctx)
    out = scalar(0, ctx)
    for e in range(max(coeffs), -1, -1):
        out = out * x + scalar(coeffs.get(e, 0), ctx)
    return out


def to_quadint(x):
    """u + v*xi rewritten as an element of Q(sqrt d) in the basis 1, omega."""
    ctx = x.ctx
    if not ctx.irreducible:
        raise ValueError("only irreducible contexts embed in a quadratic field")
    return QuadIntElement(x.a + x.b * Fraction(1 - ctx.c, 2), x.b * ctx.c, ctx.d)


def from_quadint(z, ctx):
    ctx = _ctx(ctx)
    v = z.y / ctx.c
    u = z.x - v * Fraction(1 - ctx.c, 2)
    return LambdaElement(ctx, u, v)


# --------------------------------------------------------------------------
# preimages


def _n_power_scale(qs, n):
    """Least e >= 0 with q * n^e integral for every q."""
    e = 0
    while any((q * n ** e).denominator != 1 for q in qs):
        e += 1
    return e


def preimage(x):
    """A Laurent polynomial p with embed(p) == x."""
    ctx = x.ctx
    if ctx.degenerate:
        return LaurentPoly()
    n = ctx.n
    inv_n = LaurentPoly({1: 1, 0: -2, -1: 1})  # maps to 1/n (diagonally when reducible)
    if ctx.reducible:
        m = ctx.m
        c = (x.b - x.a) / (2 * m + 1)
        e = _n_power_scale([x.a, c], n)
        scale = inv_n ** e
        diag_a = scale * int(x.a * n ** e)
        diag_c = scale * int(c * n ** e)
        p = diag_a + LaurentPoly({1: m + 1, 0: -m}) * m * diag_c
    else:
        e = _n_power_scale([x.a, x.b], n)
        scale = inv_n ** e
        p = scale * int(x.a * n ** e) + scale * int(x.b * n ** e) * LaurentPoly({1: n, 0: -n})
    assert embed(p, ctx) == x
    return p


# --------------------------------------------------------------------------
# t-shift classes


@dataclass(frozen=True)
class TShiftWitness:
    exponent: int
    sign: int = 1


def _padic_sigma0(x, p):
    """Valuation of x under the embedding xi -> r0 in Z_p, r0 = 0 mod p."""
    n = x.ctx.n
    den = x.a.denominator * x.b.denominator
    A, B = int(x.a * den), int(x.b * den)
    nm = A * A + A * B - n * B * B
    K = valuation(nm, p)
    N = K + 1
    mod = p ** N
    r = 0
    # Newton lift of r^2 - r - n = 0; derivative 2r - 1 is a p-adic unit
    while (r * r - r - n) % mod:
        r = (r - (r * r - r - n) * pow(2 * r - 1, -1, mod)) % mod
    val = A + B * r
    assert val % mod, "valuation exceeded the norm bound"
    return valuation(val % mod, p) - valuation(den, p)


def _valuation_data(ctx):
    """(valuation function, valuation of t) for a prime with t non-unit there."""
    if ctx.reducible:
        p = min(factorint(ctx.m + 1))
        return (lambda x: _qval(x.a, p)), -valuation(ctx.m + 1, p)
    p = min(factorint(ctx.n))
    return (lambda x: _padic_sigma0(x, p)), valuation(ctx.n, p)


def _qval(q, p):
    return valuation(q.numerator, p) - valuation(q.denominator, p)


def _real_log_abs(x, prec):
    with mpmath.workprec(prec):
        return mpmath.log(abs(to_quadint(x).embed(prec)))


def _real_exponent(w, prec=128):
    """Nearest-integer candidate for log|w| / log|t| (real embedding)."""
    while prec <= MAX_PREC:
        with mpmath.workprec(prec):
            ratio = _real_log_abs(w, prec) / _real_log_abs(t_image(w.ctx), prec)
            j = int(mpmath.nint(ratio))
            gap = abs(ratio - j)
            if gap < mpmath.mpf(2) ** (-(prec // 2)):
                return j
            if gap > mpmath.mpf("0.01"):
                return None
        prec *= 2
    raise PrecisionEscalation("exponent candidate ambiguous at maximum precision")


def _torsion_order(ctx):
    return 6 if ctx.n == -1 else None


def t_shift_class(u, v, mode="t_only"):
    """Witness (j, sign) with u = sign * t^j * v, or None."""
    ctx = u.ctx
    if ctx.degenerate:
        return TShiftWitness(0, 1)
    signs = (1,) if mode == "t_only" else (1, -1)
    w = u * inverse(v)
    T = t_image(ctx)
    if ctx.n == -1:
        for j in range(6):
            for s in signs:
                if w == scalar(s, ctx) * T ** j:
                    return TShiftWitness(j, s)
        return None
    if ctx.n == 1:
        j0 = _real_exponent(w)
        candidates = [] if j0 is None else [j0 + k for k in (0, -1, 1, -2, 2)]
    else:
        val, vt = _valuation_data(ctx)
        vw = val(w)
        if vw % vt:
            return None
        candidates = [vw // vt]
    for j in candidates:
        tj = T ** j
        for s in signs:
            if w == tj * s:
                return TShiftWitness(j, s)
    return None


def _lex_key(x):
    return (abs(x.a) + abs(x.b), x.a < 0, x.b < 0, x.a, x.b)


def class_representative(u, mode="t_only"):
    """Deterministic representative of the class of u modulo t^k (or ±t^k)."""
    ctx = u.ctx
    if ctx.degenerate:
        return u
    T = t_image(ctx)
    if ctx.n == -1:
        orbit = [u * T ** j for j in range(6)]
        if mode != "t_only":
            orbit += [-x for x in orbit]
        return min(orbit, key=_lex_key)
    if ctx.n == 1:
        prec = 256
        with mpmath.workprec(prec):
            ratio = _real_log_abs(u, prec) / _real_log_abs(T, prec)
            j = int(mpmath.nint(ratio))
            if abs(ratio - j) > mpmath.mpf(2) ** -64:
                j = int(mpmath.floor(ratio))
        rep = u * T ** (-j)
        if mode != "t_only" and to_quadint(rep).embed() < 0:
            rep = -rep
        return rep
    val, vt = _valuation_data(ctx)
    E = abs(vt)
    j = (val(u) // E) * (1 if vt > 0 else -1)
    rep = u * T ** (-j)
    if mode != "t_only":
        rep = min((rep, -rep), key=_lex_key)
    return rep
