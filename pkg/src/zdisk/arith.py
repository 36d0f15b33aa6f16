"""Integer helpers: bounded factorization, primality, square roots mod p."""

import math
import os
import random
from functools import lru_cache

DEFAULT_FACTOR_LIMIT = 10**18
TRIAL_BOUND = 10**6


class FactorizationLimit(ValueError):
    """Raised when an integer exceeds the configured factorization bound."""


def factor_limit():
    raw = os.environ.get("ZDISK_FACTOR_LIMIT")
    if raw:
        return int(raw)
    return DEFAULT_FACTOR_LIMIT


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n):
    # deterministic Miller-Rabin for n < 3.3e24
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n):
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        x = y = rng.randrange(2, n)
        c = rng.randrange(1, n)
        g = 1
        while g == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            g = math.gcd(abs(x - y), n)
        if g != n:
            return g


@lru_cache(maxsize=4096)
def _factor_positive(n):
    out = {}
    p = 2
    while p * p <= n and p <= TRIAL_BOUND:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
        elif m > 1:
            f = _rho(m)
            stack.extend((f, m // f))
    return tuple(sorted(out.items()))


def factorint(n):
    """Prime factorization of ``|n|`` as a dict ``{p: e}``; ``{}`` for 0 and ±1."""
    n = abs(int(n))
    if n > factor_limit():
        raise FactorizationLimit(f"|{n}| exceeds factorization bound {factor_limit()}")
    if n <= 1:
        return {}
    return dict(_factor_positive(n))


def prime_divisors(n):
    return sorted(factorint(n))


def omega(n):
    """Number of distinct positive primes dividing n."""
    return len(factorint(n))


def prime_power(n):
    """Return (p, k) if |n| = p^k with k >= 1, else None."""
    f = factorint(n)
    if len(f) != 1:
        return None
    ((p, k),) = f.items()
    return p, k


def squarefree_decomposition(n):
    """Write n = c^2 * d with c > 0 and d squarefree (sign carried by d)."""
    if n == 0:
        raise ValueError("0 has no squarefree decomposition")
    c, d = 1, -1 if n < 0 else 1
    for p, e in factorint(n).items():
        c *= p ** (e // 2)
        if e % 2:
            d *= p
    return c, d


def is_square(n):
    return n >= 0 and math.isqrt(n) ** 2 == n


def valuation(n, p):
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod(a, p):
    """A square root of a modulo an odd prime p (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r
