"""Integer Laurent polynomials in one variable t, with the involution t -> 1/t."""

import re
from dataclasses import dataclass


class LaurentPoly:
    """Sparse integer Laurent polynomial; immutable.

    ``terms`` maps exponent to nonzero coefficient.  Arithmetic is exact
    (Python ints) and values hash by their term map.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        items = {}
        if terms:
            for e, c in dict(terms).items():
                c = int(c)
                if c:
                    items[int(e)] = c
        self._terms = tuple(sorted(items.items()))
        self._hash = None

    @classmethod
    def _raw(cls, items):
        obj = cls.__new__(cls)
        obj._terms = items
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e):
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, coeffs, low=0):
        """Coefficients listed from exponent ``low`` upwards."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms

    def coeff(self, e):
        for k, c in self._terms:
            if k == e:
                return c
        return 0

    def is_zero(self):
        return not self._terms

    @property
    def min_exp(self):
        return self._terms[0][0] if self._terms else None

    @property
    def max_exp(self):
        return self._terms[-1][0] if self._terms else None

    @property
    def span(self):
        return self.max_exp - self.min_exp if self._terms else -1

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("only ±t^e is invertible in Z[t, 1/t]")
            (e, c), = self._terms
            return LaurentPoly({e * k: c ** (-k)})
        out = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k):
        """Multiply by t^k."""
        return LaurentPoly._raw(tuple((e + k, c) for e, c in self._terms))

    def involute(self):
        return LaurentPoly._raw(tuple((-e, c) for e, c in reversed(self._terms)))

    def __call__(self, x):
        # negative exponents need x invertible in its own arithmetic
        total = 0
        for e, c in self._terms:
            total = total + c * (x ** e)
        return total

    def is_symmetric(self):
        return self.involute() == self

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def involute(p):
    return p.involute()


t = LaurentPoly.monomial(1, 1)


def divmod_poly(p, q):
    """Long division of p by q over Z, leading term first.

    Returns (quotient, remainder) when every quotient coefficient is an
    integer and the remainder has span < span(q) aligned at q's low end;
    returns None when an integer quotient step is impossible.  Exponents are
    treated after shifting both to start at 0.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly(), LaurentPoly()
    qlo, qhi = q.min_exp, q.max_exp
    lead = q.coeff(qhi)
    qterms = q.items()
    rem = dict(p.items())
    quot = {}
    lo = p.min_exp
    top = p.max_exp
    while top is not None and top - lo >= qhi - qlo:
        c = rem.get(top, 0)
        if c:
            k, r = divmod(c, lead)
            if r:
                return None
            shift = top - qhi
            quot[shift] = k
            for e, qc in qterms:
                v = rem.get(e + shift, 0) - k * qc
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        top -= 1
    return LaurentPoly(quot), LaurentPoly(rem)


def exact_quotient(p, q):
    """p / q in Z[t, 1/t]; raises ValueError if q does not divide p."""
    res = divmod_poly(p, q)
    if res is None or not res[1].is_zero():
        raise ValueError("not an exact division")
    return res[0]


class NormalizationError(ValueError):
    pass


@dataclass(frozen=True)
class AlexanderPoly:
    """Symmetric Laurent polynomial with value -1 at t = 1."""

    poly: LaurentPoly

    def __post_init__(self):
        if not self.poly.is_symmetric():
            raise NormalizationError(f"{self.poly} is not symmetric")
        if self.poly(1) != -1:
            raise NormalizationError(f"{self.poly} does not evaluate to -1 at t = 1")

    def __str__(self):
        return str(self.poly)


def delta_n(n):
    """n t - (2n + 1) + n / t."""
    return AlexanderPoly(LaurentPoly({1: n, 0: -(2 * n + 1), -1: n}))


def delta_n_poly(n):
    """Delta_n shifted into an honest polynomial: n t^2 - (2n+1) t + n."""
    return delta_n(n).poly.shift(1)


def normalize_alexander(p):
    if p.is_zero():
        raise NormalizationError("the zero polynomial is not an Alexander polynomial")
    if p.span % 2:
        raise NormalizationError(f"{p} has odd span; no unit multiple is symmetric")
    centred = p.shift(-(p.min_exp + p.max_exp) // 2)
    if not centred.is_symmetric():
        raise NormalizationError(f"{p} is not symmetric up to ±t^k")
    value = centred(1)
    if value not in (1, -1):
        raise NormalizationError(f"{p} evaluates to {value} at t = 1, expected ±1")
    return AlexanderPoly(centred if value == -1 else -centred)


def recognize_quadratic(p):
    """Return n when p equals Delta_n (n = 0 for the constant -1), else None."""
    poly = p.poly if isinstance(p, AlexanderPoly) else p
    if poly == LaurentPoly.constant(-1):
        return 0
    if poly.min_exp != -1 or poly.max_exp != 1:
        return None
    n = poly.coeff(1)
    if poly == delta_n(n).poly:
        return n
    return None


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+)\s*(?P<star>\*)?\s*)?
        (?P<var>t(?:\s*\^\s*(?P<exp>[+-]?\d+))?)?""",
    re.VERBOSE,
)


def parse_poly(text):
    """Parse signed monomials such as ``-2*t^1 + 3 - 2*t^-1``."""
    s = text.replace("−", "-").replace("**", "^").strip()
    if not s:
        raise ValueError("empty polynomial")
    out = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        if m.group("star") and m.group("var") is None:
            raise ValueError(f"dangling '*' in {text!r}")
        coef = int(m.group("coef")) if m.group("coef") is not None else 1
        if m.group("sign") == "-":
            coef = -coef
        if m.group("var") is None:
            e = 0
        elif m.group("exp") is None:
            e = 1
        else:
            e = int(m.group("exp"))
        out[e] = out.get(e, 0) + coef
        pos = m.end()
        first = False
    return LaurentPoly(out)


def format_poly(p):
    if p.is_zero():
        return "0"
    parts = []
    for e, c in reversed(p.items()):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "t" if e == 1 else f"t^{e}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
