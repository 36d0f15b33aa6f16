#!/usr/bin/env python3
"""Unit-group shape for every n in a range, plus a count of each shape."""

import argparse
from collections import Counter

from zdisk.unitgroup import classify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--lo", type=int, default=-60)
    ap.add_argument("--hi", type=int, default=60)
    args = ap.parse_args()
    tally = Counter()
    for n in range(args.lo, args.hi + 1):
        s = classify(n)
        shape = s.group_shape if s.finite else f"rank {s.rank}"
        tally[shape] += 1
        extra = ""
        if s.class_data is not None:
            extra = f"  h={s.class_data.h} s={s.saturation_s}"
        if s.provenance_flags and not s.finite:
            extra += "  " + ",".join(s.provenance_flags)
        print(f"{n:>5}  {shape:<8}{extra}")
    print()
    for shape, k in sorted(tally.items()):
        print(f"{shape:<8} {k}")


if __name__ == "__main__":
    main()
