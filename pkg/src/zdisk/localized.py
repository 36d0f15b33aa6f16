"""Arithmetic in Z[1/n] and in the pair ring Z[1/n] + Z[1/n] of the reducible case."""

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import omega


class DenominatorNotSupported(ValueError):
    """A denominator has a prime factor not dividing n."""


def strip(k, n):
    """Remove from k every prime factor it shares with n (gcd stripping)."""
    k = abs(k)
    if n == 0:
        raise ValueError("context n must be nonzero")
    g = math.gcd(k, n)
    while g > 1:
        while k % g == 0:
            k //= g
        g = math.gcd(k, n)
    return k


def is_supported(q, n):
    """True iff the reduced denominator of q divides a power of n."""
    return strip(Fraction(q).denominator, n) == 1


def is_unit(q, n):
    """True iff q is a unit of Z[1/n]: numerator and denominator strip to 1."""
    q = Fraction(q)
    return q != 0 and strip(q.numerator, n) == 1 and strip(q.denominator, n) == 1


def format_rational(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text):
    return Fraction(text)


@dataclass(frozen=True)
class LocalizedRational:
    value: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.n == 0:
            raise ValueError("context n must be nonzero")
        if not is_supported(self.value, self.n):
            raise DenominatorNotSupported(
                f"{self.value} is not in Z[1/{self.n}]")

    def _other(self, other):
        if isinstance(other, LocalizedRational):
            if other.n != self.n:
                raise ValueError("mismatched localization contexts")
            return other.value
        return Fraction(other)

    def __add__(self, other):
        return LocalizedRational(self.value + self._other(other), self.n)

    __radd__ = __add__

    def __sub__(self, other):
        return LocalizedRational(self.value - self._other(other), self.n)

    def __rsub__(self, other):
        return LocalizedRational(self._other(other) - self.value, self.n)

    def __neg__(self):
        return LocalizedRational(-self.value, self.n)

    def __mul__(self, other):
        return LocalizedRational(self.value * self._other(other), self.n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # raises DenominatorNotSupported unless the divisor is a unit
        return LocalizedRational(self.value / self._other(other), self.n)

    def is_unit(self):
        return is_unit(self.value, self.n)

    def __str__(self):
        return format_rational(self.value)


def make_localized(q, n):
    return LocalizedRational(Fraction(q), n)


def unit_group_rank_Z1n(n):
    """Rank of Z[1/n]^x, i.e. the number of distinct primes dividing n."""
    if n == 0:
        raise ValueError("n must be nonzero")
    return omega(n)


@dataclass(frozen=True)
class ReduciblePair:
    first: Fraction
    second: Fraction
    m: int

    def __post_init__(self):
        object.__setattr__(self, "first", Fraction(self.first))
        object.__setattr__(self, "second", Fraction(self.second))
        if self.m < 1:
            raise ValueError("m must be a positive integer")

    @property
    def n(self):
        return self.m * (self.m + 1)


def in_S(pair):
    """Membership in the image subring: second - first lies in (2m+1) Z[1/n]."""
    n = pair.n
    if not (is_supported(pair.first, n) and is_supported(pair.second, n)):
        return False
    return is_supported((pair.second - pair.first) / (2 * pair.m + 1), n)


def in_T(x, m):
    """x is a unit of Z[1/n] with x - 1/x in (2m+1) Z[1/n], n = m(m+1)."""
    x = x.value if isinstance(x, LocalizedRational) else Fraction(x)
    n = m * (m + 1)
    if not is_unit(x, n):
        return False
    return is_supported((x - 1 / x) / (2 * m + 1), n)
