#!/usr/bin/env python3
"""Disk-count table for a knot CSV (defaults to the bundled 5-crossing sample)."""

import argparse
import sys
from importlib import resources

from zdisk.knots import dk_table_from_csv, write_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("csv", nargs="?")
    ap.add_argument("--format", choices=("csv", "json"), default="csv")
    args = ap.parse_args()
    src = args.csv or resources.files("zdisk") / "data" / "five_crossing.csv"
    with open(src, newline="") as fh:
        rows = dk_table_from_csv(fh)
    write_table(rows, sys.stdout, args.format)


if __name__ == "__main__":
    main()
