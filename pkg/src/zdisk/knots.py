"""Seifert matrices to normalized Alexander polynomials, twist knots, and
batch tables of Z-disk counts."""

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources
from typing import List, Optional

from .laurent import (
    AlexanderPoly, LaurentPoly, delta_n, exact_quotient, format_poly,
    normalize_alexander, parse_poly,
)
from .unitgroup import CAVEAT, disk_count


class InvalidSeifert(ValueError):
    pass


@dataclass(frozen=True)
class KnotRecord:
    name: str
    seifert: Optional[tuple] = None
    alexander: Optional[str] = None

    def __post_init__(self):
        if self.seifert is None and self.alexander is None:
            raise ValueError(f"record {self.name!r} needs a Seifert matrix or an Alexander polynomial")
        if self.seifert is not None:
            object.__setattr__(self, "seifert", tuple(tuple(int(v) for v in row) for row in self.seifert))


def _det(M):
    """Fraction-free (Bareiss) determinant of a square matrix of LaurentPolys."""
    M = [list(row) for row in M]
    size = len(M)
    if size == 0:
        return LaurentPoly.constant(1)
    sign = 1
    prev = LaurentPoly.constant(1)
    for k in range(size - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, size):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly()
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                M[i][j] = exact_quotient(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev)
        prev = M[k][k]
    return M[-1][-1] * sign


def _int_det(V):
    return _det([[LaurentPoly.constant(v) for v in row] for row in V]).coeff(0)


def validate_seifert(V):
    size = len(V)
    if any(len(row) != size for row in V):
        raise InvalidSeifert("Seifert matrix must be square")
    if size % 2:
        raise InvalidSeifert("Seifert matrix must have even size")
    skew = [[V[i][j] - V[j][i] for j in range(size)] for i in range(size)]
    if size and abs(_int_det(skew)) != 1:
        raise InvalidSeifert("det(V - V^T) must be ±1")


def alexander_from_seifert(V):
    """normalize(det(t V - V^T))."""
    validate_seifert(V)
    size = len(V)
    M = [[LaurentPoly({1: V[i][j], 0: -V[j][i]}) for j in range(size)] for i in range(size)]
    return normalize_alexander(_det(M))


def twist_matrix(n):
    return ((-1, 1), (0, n))


def twist_knot_record(n):
    return KnotRecord(f"K_{n}", seifert=twist_matrix(n), alexander=format_poly(delta_n(n).poly))


def record_alexander(rec):
    if rec.seifert is not None:
        return alexander_from_seifert(rec.seifert)
    a = rec.alexander
    if isinstance(a, AlexanderPoly):
        return a
    return normalize_alexander(a if isinstance(a, LaurentPoly) else parse_poly(a))


def _count_cell(v):
    return v


def dk_table(records):
    """One row per record: name, n, isotopy and equivalence counts, caveat."""
    rows = []
    for rec in records:
        row = {"name": rec.name, "alexander": None, "n": None, "isotopy_count": None,
               "equivalence_count": None, "rank": None, "note": None, "error": None,
               "caveat": CAVEAT}
        try:
            poly = record_alexander(rec)
            report = disk_count(poly)
        except (ValueError, ArithmeticError) as exc:
            row["error"] = f"{type(exc).__name__}: {exc}"
        else:
            row.update(alexander=str(poly), n=report.n,
                       isotopy_count=_count_cell(report.isotopy_count),
                       equivalence_count=_count_cell(report.equivalence_count),
                       rank=report.rank, note=report.note)
        rows.append(row)
    return rows


TABLE_FIELDS = ["name", "alexander", "n", "isotopy_count", "equivalence_count",
                "rank", "note", "error", "caveat"]


def parse_seifert(text):
    text = text.strip()
    if not text:
        return None
    if text in ("[]", "empty"):
        return ()
    return tuple(tuple(int(v) for v in row.split(",")) for row in text.split(";"))


def read_records(stream):
    """Records from CSV columns name, seifert, alexander; bad rows become error records."""
    out = []
    for i, line in enumerate(csv.DictReader(stream)):
        name = (line.get("name") or f"row{i + 1}").strip()
        seifert = (line.get("seifert") or "").strip()
        alex = (line.get("alexander") or "").strip()
        try:
            out.append(KnotRecord(name, seifert=parse_seifert(seifert), alexander=alex or None))
        except ValueError as exc:
            out.append(_BadRecord(name, f"{type(exc).__name__}: {exc}"))
    return out


@dataclass(frozen=True)
class _BadRecord:
    name: str
    error: str


def dk_table_from_csv(stream):
    records = read_records(stream)
    good = [r for r in records if isinstance(r, KnotRecord)]
    table = iter(dk_table(good))
    rows = []
    for r in records:
        if isinstance(r, KnotRecord):
            rows.append(next(table))
        else:
            rows.append({k: None for k in TABLE_FIELDS} | {"name": r.name, "error": r.error,
                                                           "caveat": CAVEAT})
    return rows


def write_table(rows, stream, fmt="csv"):
    if fmt == "json":
        json.dump(rows, stream, indent=2)
        stream.write("\n")
        return
    writer = csv.DictWriter(stream, fieldnames=TABLE_FIELDS)
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if row.get(k) is None else row[k]) for k in TABLE_FIELDS})


def bundled_five_crossing():
    return resources.files("zdisk.data").joinpath("five_crossing.csv").read_text()


def five_crossing_table():
    return dk_table_from_csv(io.StringIO(bundled_five_crossing()))
