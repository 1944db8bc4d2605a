"""Command-line front end.

Exit codes: 0 all checks pass, 1 some verdict failed, 2 usage error,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, Sequence

from . import enumeration
from .closed_forms import Family, polynomial
from .clt import clt_report
from .enumeration import DistTable, brute_distribution, group_order, iter_group
from .errors import ResourceLimitError, StatisticNotApplicableError
from .group import GroupId, SignClass, StatKind
from .identities import (
    CORRECTED,
    LITERAL,
    NAMED_IDENTITIES,
    CarlitzFamily,
    Verdict,
    verify_carlitz,
)
from .involution import AMBIENTS, build_fixed_points, class_reports, fixed_point_gf, partition, signed_sum, verify_cancellation
from .closed_forms import sgn_bdes_bivariate

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

DIST_STATS = ("des", "exc", "des-b", "exc-b", "des-d")


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if lo_i < 1 or hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"empty or nonpositive range {text!r}")
    return range(lo_i, hi_i + 1)


def _emit_lines(out, items: Iterable[dict]) -> None:
    for item in items:
        out.write(dumps(item) + "\n")


# --- dist --------------------------------------------------------------------

def cmd_dist(args, out) -> int:
    g = GroupId(args.group)
    stat = StatKind(args.stat)
    sign = SignClass(args.sign)
    if not stat.applicable(g):
        raise UsageError(f"statistic {stat.value} is not defined on group {g.value}")
    fam = Family.lookup(g, stat)
    method = args.method
    if method == "auto":
        method = "closed" if fam is not None else "brute"
    if method in ("closed", "both") and fam is None:
        raise UsageError(f"no closed form for group {g.value} with statistic {stat.value}")

    closed = brute = None
    if method in ("closed", "both"):
        closed = DistTable(args.n, g, sign, stat, polynomial(fam, args.n, sign).coeffs)
    if method in ("brute", "both"):
        brute = brute_distribution(args.n, g, sign, stat, workers=args.threads)
    table = brute if brute is not None else closed
    match = None if method != "both" else closed.coeffs == brute.coeffs

    if args.format == "csv":
        out.write(table.to_csv())
        if match is not None:
            out.write(f"# match,{str(match).lower()}\n")
    else:
        payload = table.to_json()
        payload["method"] = method
        if match is not None:
            payload["match"] = match
            payload["closed_coeffs"] = [str(c) for c in closed.coeffs]
        out.write(dumps(payload) + "\n")
    return EXIT_OK if match in (None, True) else EXIT_FAIL


# --- verify ------------------------------------------------------------------

def _verdicts_exit(verdicts: Sequence[Verdict]) -> int:
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_FAIL


def cmd_verify_carlitz(args, out) -> int:
    fam = CarlitzFamily(args.family)
    if args.n_range.start < fam.onset:
        raise UsageError(f"family {fam.value} holds for n >= {fam.onset}")
    verdicts = []
    for n in args.n_range:
        for sign in fam.signs:
            v = verify_carlitz(fam, n, args.order, sign, reading=args.reading)
            verdicts.append(v)
            out.write(dumps(v.to_json()) + "\n")
    return _verdicts_exit(verdicts)


def cmd_verify_identity(args, out) -> int:
    ident = NAMED_IDENTITIES[args.name]
    if args.n_range.start < ident.onset:
        raise UsageError(f"identity {ident.name} holds for n >= {ident.onset}")
    if args.threads is not None:
        enumeration.clear_cache()
    verdicts = []
    for n in args.n_range:
        for v in ident.run(n):
            verdicts.append(v)
            out.write(dumps(v.to_json()) + "\n")
    return _verdicts_exit(verdicts)


def involution_verdicts(n: int, ambient: GroupId) -> tuple[list[dict], list[Verdict]]:
    """Per-class reports plus verdicts for one degree and ambient set."""
    reports = class_reports(n, ambient)
    tag = f"involution:{ambient.value}"
    full = signed_sum(iter_group(n, ambient))
    size_total = sum(r.size for r in reports)
    verdicts = [
        Verdict(f"{tag}:partition", n, None, size_total == group_order(n, GroupId.D),
                None if size_total == group_order(n, GroupId.D) else 0,
                str(size_total), str(group_order(n, GroupId.D))),
    ]
    for cls in (2, 4, 5, 6):
        label = "2+3" if cls == 2 else str(cls)
        verdicts.append(Verdict(f"{tag}:cancel:{label}", n, None, verify_cancellation(n, ambient, cls)))
    residue = reports[0].signed_sum
    verdicts.append(Verdict(f"{tag}:residue", n, None, residue == full, None, str(residue), str(full)))
    which = "L" if ambient is GroupId.D else "M"
    fixed = build_fixed_points(n, which)
    expected_size = (2**n if n % 2 == 0 else 2 ** (n - 1)) if which == "L" else (0 if n % 2 == 0 else 2 ** (n - 1))
    verdicts.append(Verdict(f"{tag}:{which}-size", n, None, len(fixed) == expected_size,
                            None, str(len(fixed)), str(expected_size)))
    gf, closed = fixed_point_gf(n, which), sgn_bdes_bivariate(n, ambient)
    verdicts.append(Verdict(f"{tag}:{which}-gf", n, None, gf == closed, None, str(gf), str(closed)))
    class1 = set(partition(n, ambient)[1])
    leftover = [p for p in class1 if p not in set(fixed)]
    verdicts.append(Verdict(f"{tag}:{which}-sufficiency", n, None,
                            set(fixed) <= class1 and signed_sum(leftover).is_zero()))
    return [r.to_json() for r in reports], verdicts


def cmd_verify_involution(args, out) -> int:
    if args.n_range.start < 3:
        raise UsageError("the six-class partition needs n >= 3")
    verdicts = []
    for n in args.n_range:
        for ambient in AMBIENTS:
            reports, vs = involution_verdicts(n, ambient)
            _emit_lines(out, reports)
            _emit_lines(out, (v.to_json() for v in vs))
            verdicts.extend(vs)
    return _verdicts_exit(verdicts)


# --- clt -----------------------------------------------------------------------

def cmd_clt(args, out) -> int:
    fam = Family(args.family)
    sign = SignClass(args.sign)
    reports = clt_report(fam, sign, args.n_range)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "mean", "variance", "ks"])
        for r in reports:
            w.writerow(r.csv_row())
        out.write(buf.getvalue())
    else:
        _emit_lines(out, (r.to_json() for r in reports))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for enumeration (default: all cores)")
    common.add_argument("--seedless", action="store_true",
                        help="accepted for CI scripts; nothing in this tool is random")

    parser = argparse.ArgumentParser(prog="weyl-eulerian", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", parents=[common], help="distribution table of a statistic")
    p.add_argument("--group", choices=[g.value for g in GroupId], required=True)
    p.add_argument("--stat", choices=DIST_STATS, required=True)
    p.add_argument("--sign", choices=[s.value for s in SignClass], default="all")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("auto", "closed", "brute", "both"), default="auto")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_dist)

    v = sub.add_parser("verify", parents=[common], help="identity campaigns")
    vsub = v.add_subparsers(dest="what", required=True)
    c = vsub.add_parser("carlitz", parents=[common])
    c.add_argument("--family", choices=[f.value for f in CarlitzFamily], required=True)
    c.add_argument("--n-range", type=parse_range, required=True)
    c.add_argument("--order", type=int, default=50)
    c.add_argument("--reading", choices=(CORRECTED, LITERAL), default=CORRECTED,
                   help="Bernoulli term of the type D identity")
    c.set_defaults(func=cmd_verify_carlitz)
    i = vsub.add_parser("identity", parents=[common])
    i.add_argument("--name", choices=sorted(NAMED_IDENTITIES), required=True)
    i.add_argument("--n-range", type=parse_range, required=True)
    i.set_defaults(func=cmd_verify_identity)
    inv = vsub.add_parser("involution", parents=[common])
    inv.add_argument("--n-range", type=parse_range, required=True)
    inv.set_defaults(func=cmd_verify_involution)

    k = sub.add_parser("clt", parents=[common], help="moments and Kolmogorov distance")
    k.add_argument("--family", choices=[f.value for f in Family], required=True)
    k.add_argument("--sign", choices=[s.value for s in SignClass], default="all")
    k.add_argument("--n-range", type=parse_range, required=True)
    k.add_argument("--format", choices=("csv", "json"), default="csv")
    k.set_defaults(func=cmd_clt)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    if args.threads is not None:
        if args.threads < 1:
            print("error: --threads must be positive", file=sys.stderr)
            return EXIT_USAGE
        enumeration.set_default_workers(args.threads)
    try:
        return args.func(args, out)
    except (UsageError, StatisticNotApplicableError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    finally:
        if args.threads is not None:
            enumeration.set_default_workers(None)


if __name__ == "__main__":
    sys.exit(main())
