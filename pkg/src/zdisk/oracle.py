"""Brute-force enumeration of unitary units of Lambda_n.

Works only with integer polynomial arithmetic: a Laurent polynomial p with
exponents in [-D, D] and coefficients in [-C, C] is unitary iff Delta_n
divides p(t) p(1/t) - 1.  Candidates are filtered by evaluating at the
roots of Delta_n modulo two large primes, then confirmed by exact integer
long division.  Classes modulo t^k (or ±t^k) are formed by union-find,
and each union is confirmed by an exact divisibility check.
"""

import itertools
import os
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import List

import numpy as np

from .arith import is_prime, sqrt_mod
from .laurent import AlexanderPoly, LaurentPoly, delta_n, divmod_poly

FILTER_PRIME_START = 2**31 - 1
TAIL_DIGITS = 5
INT64_SAFE = 2**62


@dataclass(frozen=True)
class OracleConfig:
    degree_bound: int = 3
    coeff_bound: int = 6
    shift_bound: int = 12
    mode: str = "t_only"
    threads: int = 1

    def __post_init__(self):
        for name in ("degree_bound", "coeff_bound", "shift_bound"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.mode not in ("t_only", "plus_minus_t"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


@dataclass
class OracleResult:
    n: int
    classes: List[LaurentPoly]
    complete_within_bounds: bool
    config: OracleConfig
    unit_count: int = 0
    element_count: int = 0
    notes: List[str] = field(default_factory=list)

    @property
    def count(self):
        return len(self.classes)

    def to_json(self):
        return {
            "n": self.n,
            "classes": [str(c) for c in self.classes],
            "count": self.count,
            "complete_within_bounds": self.complete_within_bounds,
            "config": asdict(self.config),
            "unit_count": self.unit_count,
            "element_count": self.element_count,
            "notes": list(self.notes),
        }


class UnitBox(Sequence):
    """Rows of coefficients for exponents low..low+width-1, viewed as LaurentPolys."""

    def __init__(self, rows, low):
        self.rows = rows
        self.low = low

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[k] for k in range(*i.indices(len(self)))]
        return LaurentPoly.from_coeffs([int(c) for c in self.rows[i]], self.low)


# --------------------------------------------------------------------------
# exact divisibility


def _delta_coeffs(delta):
    poly = delta.poly if isinstance(delta, AlexanderPoly) else delta
    return [poly.coeff(e) for e in range(poly.min_exp, poly.max_exp + 1)]


def divides_exactly(delta, q):
    """True iff q = delta * r for some integer Laurent polynomial r."""
    poly = delta.poly if isinstance(delta, AlexanderPoly) else delta
    if poly.is_zero():
        raise ZeroDivisionError("delta must be nonzero")
    res = divmod_poly(q, poly)
    return res is not None and res[1].is_zero()


def divides_exactly_batch(delta, Q):
    """Row-wise exact divisibility of integer polynomials Q (lowest degree first)."""
    dc = _delta_coeffs(delta)
    k = len(dc) - 1
    lead = dc[-1]
    rows, width = Q.shape
    steps = max(width - k, 0)
    growth = 1 + sum(abs(c) for c in dc[:-1]) / abs(lead)
    bound = (int(np.abs(Q).max()) if Q.size else 0) * growth ** steps
    R = Q.astype(np.int64 if bound < INT64_SAFE else object, copy=True)
    ok = np.ones(rows, dtype=bool)
    for top in range(width - 1, k - 1, -1):
        c = R[:, top]
        ok &= (c % lead) == 0
        qc = c // lead
        for i, di in enumerate(dc):
            if di:
                R[:, top - k + i] -= qc * di
    if k:
        ok &= ~np.any(R[:, :k] != 0, axis=1)
    return ok


def _norm_minus_one(P):
    """Coefficients of p(t) p(1/t) - 1 for rows p (width L -> width 2L-1)."""
    rows, L = P.shape
    out = np.zeros((rows, 2 * L - 1), dtype=np.int64)
    rev = P[:, ::-1]
    for i in range(L):
        out[:, i:i + L] += P[:, i:i + 1] * rev
    out[:, L - 1] -= 1
    return out


# --------------------------------------------------------------------------
# modular filter


def _filter_primes(n, count=2):
    """Primes P below 2^31 with P not dividing n(4n+1) and Delta_n split mod P."""
    out = []
    P = FILTER_PRIME_START
    while len(out) < count:
        if is_prime(P) and n % P and (4 * n + 1) % P:
            s = sqrt_mod(4 * n + 1, P)
            if s is not None:
                alpha = (2 * n + 1 + s) * pow(2 * n, -1, P) % P
                assert (n * alpha * alpha - (2 * n + 1) * alpha + n) % P == 0
                out.append((P, alpha))
        P -= 2
    return out


def _powers(alpha, P, low, width):
    return np.array([pow(alpha, e, P) for e in range(low, low + width)], dtype=np.int64)


def _eval_rows(rows, pw, P):
    """Row-wise sum c_e * alpha^e mod P."""
    acc = np.zeros(len(rows), dtype=np.int64)
    for j in range(rows.shape[1]):
        acc = (acc + (rows[:, j] % P) * pw[j]) % P
    return acc


def _tail_table(values, pw, P):
    acc = np.zeros(1, dtype=np.int64)
    for w in pw:
        acc = ((acc[:, None] + (values % P) * w % P) % P).ravel()
    return acc


def enumerate_unitary_box(n, cfg=OracleConfig()):
    """All unitary p in the box as a UnitBox (rows of coefficients)."""
    if n == 0:
        raise ValueError("n must be nonzero")
    D, C = cfg.degree_bound, cfg.coeff_bound
    L = 2 * D + 1
    low = -D
    base = 2 * C + 1
    values = np.arange(-C, C + 1, dtype=np.int64)
    (P1, a1), (P2, a2) = _filter_primes(n)
    b1 = pow(a1, -1, P1)
    pa, pb = _powers(a1, P1, low, L), _powers(b1, P1, low, L)
    r = min(TAIL_DIGITS, L)
    h = L - r
    tailA = _tail_table(values, pa[h:], P1)
    tailB = _tail_table(values, pb[h:], P1)

    def scan(prefix):
        hA = sum(c * int(pa[i]) for i, c in enumerate(prefix)) % P1
        hB = sum(c * int(pb[i]) for i, c in enumerate(prefix)) % P1
        A = (tailA + hA) % P1
        B = (tailB + hB) % P1
        idx = np.nonzero((A * B) % P1 == 1)[0]
        if not len(idx):
            return np.zeros((0, L), dtype=np.int64)
        digits = np.zeros((len(idx), r), dtype=np.int64)
        rem = idx.copy()
        for j in range(r - 1, -1, -1):
            digits[:, j] = rem % base - C
            rem //= base
        head = np.tile(np.array(prefix, dtype=np.int64), (len(idx), 1))
        return np.hstack([head, digits])

    prefixes = list(itertools.product(range(-C, C + 1), repeat=h))
    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            chunks = list(pool.map(scan, prefixes))
    else:
        chunks = [scan(pfx) for pfx in prefixes]
    cand = np.vstack(chunks) if chunks else np.zeros((0, L), dtype=np.int64)
    # second prime, then exact confirmation
    b2 = pow(a2, -1, P2)
    A2 = _eval_rows(cand, _powers(a2, P2, low, L), P2)
    B2 = _eval_rows(cand, _powers(b2, P2, low, L), P2)
    cand = cand[(A2 * B2) % P2 == 1]
    exact = divides_exactly_batch(delta_n(n), _norm_minus_one(cand))
    return UnitBox(cand[exact], low)


def enumerate_unitary(n, cfg=OracleConfig()):
    """Unitary units of Lambda_n represented inside the box; a sequence of LaurentPoly."""
    return enumerate_unitary_box(n, cfg)


# --------------------------------------------------------------------------
# classes


class DisjointSet:
    def __init__(self, size):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def poly_order_key(p):
    """Smaller is simpler: total coefficient size, span, distance from t^0,
    then higher exponents and positive leading coefficients first."""
    items = p.items()
    weight = sum(abs(c) for _, c in items)
    spread = abs(p.min_exp) + abs(p.max_exp) if items else 0
    return (weight, p.span, spread, tuple((-e, -c) for e, c in reversed(items)))


def _as_rows(units):
    if isinstance(units, UnitBox):
        return units.rows, units.low
    polys = list(units)
    if not polys:
        return np.zeros((0, 1), dtype=np.int64), 0
    low = min(p.min_exp for p in polys)
    high = max(p.max_exp for p in polys)
    big = max(abs(c) for p in polys for _, c in p.items())
    rows = np.zeros((len(polys), high - low + 1), dtype=np.int64 if big < 2**31 else object)
    for i, p in enumerate(polys):
        for e, c in p.items():
            rows[i, e - low] = c
    return rows, low


def _keys(rows, low, primes):
    cols = []
    for P, a in primes:
        b = pow(a, -1, P)
        cols.append(_eval_rows(rows, _powers(a, P, low, rows.shape[1]), P))
        cols.append(_eval_rows(rows, _powers(b, P, low, rows.shape[1]), P))
    return np.stack(cols, axis=1) if cols else np.zeros((len(rows), 0), dtype=np.int64)


def _row_poly(row, low):
    return LaurentPoly.from_coeffs([int(c) for c in row], low)


def count_classes(units, n, cfg=OracleConfig(), expected=True):
    """Bucket unitary units into classes modulo t^j (|j| <= J), or ±t^j."""
    rows, low = _as_rows(units)
    delta = delta_n(n)
    primes = _filter_primes(n)
    if len(rows) == 0:
        return OracleResult(n, [], False, cfg, notes=["no units found in the box"])
    keys = _keys(rows, low, primes)
    uniq, inverse = np.unique(keys, axis=0, return_inverse=True)
    inverse = inverse.ravel()
    order = np.argsort(inverse, kind="stable")
    starts = np.searchsorted(inverse[order], np.arange(len(uniq)))
    first = order[starts]
    # equal keys must be equal elements of Lambda_n; confirm exactly
    same = divides_exactly_batch(delta, rows - rows[first[inverse]])
    element_of = inverse.copy()
    elements = [int(i) for i in first]
    element_keys = [tuple(int(v) for v in k) for k in uniq]
    for bad in np.nonzero(~same)[0]:
        # key collision between distinct elements: place it exactly
        p = _row_poly(rows[bad], low)
        for e, rep in enumerate(elements):
            if element_keys[e] == tuple(int(v) for v in keys[bad]) and \
                    divides_exactly(delta, p - _row_poly(rows[rep], low)):
                element_of[bad] = e
                break
        else:
            elements.append(int(bad))
            element_keys.append(tuple(int(v) for v in keys[bad]))
            element_of[bad] = len(elements) - 1
    by_key = {}
    for e, k in enumerate(element_keys):
        by_key.setdefault(k, []).append(e)
    rep_polys = [_row_poly(rows[i], low) for i in elements]
    uf = DisjointSet(len(elements))
    signs = (1,) if cfg.mode == "t_only" else (1, -1)
    shifts = [(j, s) for j in range(0, cfg.shift_bound + 1) for s in signs if (j, s) != (0, 1)]
    for e, k in enumerate(element_keys):
        for j, s in shifts:
            shifted = []
            for idx, (P, a) in enumerate(primes):
                aj = pow(a, j, P)
                shifted.append(s * k[2 * idx] * aj % P)
                shifted.append(s * k[2 * idx + 1] * pow(aj, -1, P) % P)
            for other in by_key.get(tuple(shifted), ()):
                if uf.find(other) == uf.find(e):
                    continue
                if divides_exactly(delta, rep_polys[other] - rep_polys[e].shift(j) * s):
                    uf.union(other, e)
    labels = np.array([uf.find(e) for e in element_of[np.arange(len(rows))]])
    weight = np.abs(rows).sum(axis=1)
    classes = []
    for root in sorted(set(labels.tolist())):
        idx = np.nonzero(labels == root)[0]
        w = weight[idx]
        cand = idx[w == w.min()]
        classes.append(min((_row_poly(rows[i], low) for i in cand), key=poly_order_key))
    classes.sort(key=poly_order_key)
    result = OracleResult(n, classes, False, cfg, unit_count=len(rows),
                          element_count=len(elements))
    if expected:
        _compare_with_classifier(result)
    return result


def _compare_with_classifier(result):
    from .unitgroup import classify, is_finite_case
    n = result.n
    if not is_finite_case(n):
        result.notes.append("infinite group: count is a lower bound on distinct classes")
        return
    s = classify(n)
    want = s.cardinality if result.config.mode == "t_only" else s.pm_variant.cardinality
    if result.count == want:
        result.complete_within_bounds = True
    else:
        result.notes.append(
            f"found {result.count} classes in the box; the classifier expects {want} "
            "(raise the degree/coefficient bounds)")


def run_oracle(n, cfg=OracleConfig()):
    return count_classes(enumerate_unitary_box(n, cfg), n, cfg)


def default_threads():
    return os.cpu_count() or 1
