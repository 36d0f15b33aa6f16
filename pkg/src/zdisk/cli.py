"""Command-line entry point: ``zdisk <subcommand> ...``."""

import argparse
import json
import sys

from .arith import FactorizationLimit
from .knots import dk_table_from_csv, write_table
from .laurent import delta_n, format_poly, parse_poly
from .lambda_ring import preimage
from .oracle import OracleConfig, run_oracle
from .unitgroup import CAVEAT, classify, classify_pm, disk_count


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; 2 is reserved for factorization limits
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _dump(obj):
    print(json.dumps(obj, sort_keys=True, indent=2))


def _reps_text(reps):
    return ", ".join(str(r) for r in reps) if reps else "-"


def cmd_classify(args):
    s = classify_pm(args.n) if args.pm else classify(args.n)
    obj = s.to_json()
    if args.pm:
        obj = {"n": args.n, "pm": obj, "caveat": CAVEAT}
    if args.json:
        _dump(obj)
        return 0
    if s.finite:
        print(f"n = {args.n}: shape {s.group_shape}, {s.cardinality} classes")
        print(f"coset representatives: {_reps_text(s.coset_reps)}")
    else:
        print(f"n = {args.n}: infinite, rank {s.rank}")
        gens = getattr(s, "generators", None)
        if gens:
            print(f"generators: {_reps_text(gens)}")
    flags = getattr(s, "provenance_flags", None)
    if flags:
        print(f"flags: {', '.join(flags)}")
    print(CAVEAT)
    return 0


def cmd_disks(args):
    if args.poly is not None:
        try:
            p = parse_poly(args.poly)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        p = delta_n(args.n).poly
    report = disk_count(p)
    if args.json:
        _dump(report.to_json())
        return 0
    print(f"alexander: {format_poly(p)}")
    if report.n is not None:
        print(f"n = {report.n}")
    print(f"isotopy classes: {report.isotopy_count}")
    print(f"equivalence classes: {report.equivalence_count}")
    if report.rank:
        print(f"rank: {report.rank}")
    if report.note:
        print(f"note: {report.note}")
    print(report.caveat)
    return 0


def cmd_units(args):
    s = classify(args.n)
    elems = s.coset_reps if s.finite else s.generators
    rows = []
    for x in elems or []:
        try:
            pre = format_poly(preimage(x))
        except (ValueError, NotImplementedError):
            pre = None
        rows.append({"element": x.to_json(), "text": str(x), "preimage": pre})
    kind = "coset_reps" if s.finite else "generators"
    if args.json:
        _dump({"n": args.n, "kind": kind, "units": rows, "flags": s.provenance_flags})
        return 0
    print(f"n = {args.n}: {kind}")
    for r in rows:
        print(f"  {r['text']}    <- {r['preimage'] or '?'}")
    return 0


def cmd_oracle(args):
    if args.n == 0:
        raise UsageError("the oracle needs n != 0")
    try:
        cfg = OracleConfig(args.deg, args.coeff, args.shift,
                           "plus_minus_t" if args.pm else "t_only", args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    res = run_oracle(args.n, cfg)
    if args.json:
        _dump(res.to_json())
        return 0
    qual = "exact" if res.complete_within_bounds else "lower bound"
    print(f"n = {args.n}: {res.count} classes ({qual}), "
          f"{res.unit_count} unitary units in box")
    for note in res.notes:
        print(f"note: {note}")
    return 0


def cmd_knot_table(args):
    try:
        with open(args.input, newline="") as fh:
            rows = dk_table_from_csv(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from exc
    if args.output:
        with open(args.output, "w", newline="") as out:
            write_table(rows, out, args.format)
    else:
        write_table(rows, sys.stdout, args.format)
    return 0


def cmd_selftest(args):
    from .selftest import run_all
    skip = {"2", "3"} if args.quick else set()
    results = run_all(skip=skip)
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser():
    parser = _Parser(prog="zdisk", description="Unitary units of Z[t,1/t]/(Delta_n) and disk counts.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="unit group structure modulo t-shifts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pm", action="store_true", help="quotient by ±t^k instead of t^k")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("disks", help="disk counts for an Alexander polynomial")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--poly")
    g.add_argument("--n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_disks)

    p = sub.add_parser("units", help="coset representatives or generators with polynomial preimages")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_units)

    p = sub.add_parser("oracle", help="brute-force class count in a coefficient box")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--deg", type=int, default=3)
    p.add_argument("--coeff", type=int, default=6)
    p.add_argument("--shift", type=int, default=12)
    p.add_argument("--pm", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("knot-table", help="d_K table from a CSV of knots")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_knot_table)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--quick", action="store_true", help="skip the oracle-based checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def _glue_values(argv):
    # let "--poly -2*t+3" through: argparse would read the value as a flag
    out = list(argv)
    for i, tok in enumerate(out[:-1]):
        if tok == "--poly" and out[i + 1].startswith("-"):
            out[i:i + 2] = [f"--poly={out[i + 1]}"]
            break
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_glue_values(argv))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"zdisk: error: {exc}", file=sys.stderr)
        return 1
    except FactorizationLimit as exc:
        print(f"zdisk: factorization limit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
