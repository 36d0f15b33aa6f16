#!/usr/bin/env python3
"""Brute-force class counts next to the classifier's answer, with timings.

    python3 scripts/oracle_table.py --deg 3 --coeff 6 --shift 12 --threads 8
"""

import argparse
import time

from zdisk.oracle import OracleConfig, run_oracle
from zdisk.unitgroup import classify, classify_pm

DEFAULT_NS = (-9, -8, -4, -3, -2, -1, 1, 2, 3, 5)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="*", default=DEFAULT_NS)
    ap.add_argument("--deg", type=int, default=3)
    ap.add_argument("--coeff", type=int, default=6)
    ap.add_argument("--shift", type=int, default=12)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    print(f"{'n':>4} {'units':>8} {'t':>4} {'+-t':>4} {'expect':>8} {'complete':>9} {'sec':>7}")
    total = 0.0
    for n in args.n:
        t0 = time.perf_counter()
        base = dict(degree_bound=args.deg, coeff_bound=args.coeff,
                    shift_bound=args.shift, threads=args.threads)
        r = run_oracle(n, OracleConfig(**base))
        rpm = run_oracle(n, OracleConfig(mode="plus_minus_t", **base))
        dt = time.perf_counter() - t0
        total += dt
        s = classify(n)
        expect = f"{s.cardinality}/{classify_pm(n).cardinality}" if s.finite else f"rank {s.rank}"
        print(f"{n:>4} {r.unit_count:>8} {r.count:>4} {rpm.count:>4} {expect:>8} "
              f"{str(r.complete_within_bounds):>9} {dt:>7.2f}")
    print(f"total {total:.1f}s with {args.threads} thread(s)")


if __name__ == "__main__":
    main()
