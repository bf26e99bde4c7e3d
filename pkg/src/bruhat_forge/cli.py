"""
Command-line front end.

Words on the command line are digit strings with labels read mod 3
("1234321" works as well as "1201021"); the empty string "" is the
identity.  Exit codes: 0 success, 1 usage or bad input, 2 verification
failure or formula/recursion disagreement.  The environment variable
BRUHAT_FORGE_CACHE points at the on-disk KL cache; cache hits never
change any output.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional

from . import cache as cache_mod
from . import closedform, hecke, poset, regions, render, verify, weyl
from .laurent import from_q
from .weyl import Element

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _element(word: str) -> Element:
    try:
        return weyl.from_word(word)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(1)


def _cmd_kl(args) -> int:
    x = _element(args.x)
    y = _element(args.y)
    ldiff = y.length - x.length
    kl_cache = cache_mod.cache_from_env()

    p_formula = None
    if args.via in ("formula", "both"):
        cached = kl_cache.get(x.word(), y.word()) if kl_cache is not None else None
        if cached is not None:
            p_formula = cached
        else:
            p_formula = closedform.kl_fast(x, y)
            if kl_cache is not None:
                kl_cache.put(x.word(), y.word(), p_formula)
    p_recursion = None
    if args.via in ("recursion", "both"):
        p_recursion = hecke.kl_polynomial(x, y)[1]

    if args.via == "both" and p_formula != p_recursion:
        print(
            f"DISAGREEMENT: formula {p_formula} vs recursion {p_recursion}",
            file=sys.stderr,
        )
        return 2
    p = p_formula if p_formula is not None else p_recursion
    if p.is_zero:
        print("not comparable: P = 0")
        return 0
    h = from_q(p, ldiff)
    print(f"h = {h}")
    print(f"P = {p}")
    return 0


def _cmd_classify(args) -> int:
    tag = regions.classify(_element(args.word))
    print(json.dumps(tag.to_json_obj(), sort_keys=True))
    return 0


def _cmd_interval(args) -> int:
    x = _element(args.x)
    y = _element(args.y)
    try:
        interval = poset.build_interval(x, y)
    except poset.NotComparableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(interval.to_json_obj()))
    else:
        print(
            f"[{x.word() or 'id'}, {y.word() or 'id'}]: {len(interval)} members, "
            f"span {interval.span}, rank sizes {list(interval.rank_sizes)}"
        )
    return 0


def _write_reports(report, args) -> None:
    if getattr(args, "json_out", None):
        with open(args.json_out, "w") as fh:
            fh.write(report.to_json() + "\n")
    if getattr(args, "csv_out", None):
        with open(args.csv_out, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerows(report.to_csv_rows())
            writer.writerows(report.census_csv_rows())


def _cmd_verify(args) -> int:
    reports = []
    if args.suite in ("conjecture", "all"):
        reports.append(
            verify.verify_conjecture(args.max_length or 8, jobs=args.jobs)
        )
    if args.suite in ("closed-forms", "all"):
        reports.append(verify.verify_closed_forms(args.max_length or 15))
    if args.suite in ("lemmas", "all"):
        kwargs = {"jobs": args.jobs}
        if args.max_length:
            kwargs.update(
                monotonicity_bound=args.max_length,
                z_bound=args.max_length,
                structural_bound=args.max_length,
                g_invariance_bound=args.max_length,
            )
        reports.append(verify.verify_lemma_suite(**kwargs))
    ok = True
    for report in reports:
        print("\n".join(report.summary_lines()))
        ok &= report.passed
        _write_reports(report, args)
    print("ALL SUITES PASS" if ok else "SUITE FAILURES PRESENT")
    return 0 if ok else 2


def _cmd_census(args) -> int:
    rows = verify.iso_class_census(args.max_length, jobs=args.jobs)
    print(f"{'span':>5} {'classes':>8} {'intervals':>10}")
    for row in rows:
        print(f"{row['span']:>5} {row['classes']:>8} {row['intervals']:>10}")
    return 0


def _cmd_render(args) -> int:
    if args.interval is not None:
        x = _element(args.interval[0])
        y = _element(args.interval[1])
        try:
            doc = render.render_interval(x, y)
        except poset.NotComparableError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    else:
        doc = render.render_regions(args.radius)
    with open(args.output, "w") as fh:
        fh.write(doc + "\n")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="bruhat-forge",
        description=(
            "Exact Kazhdan-Lusztig and Bruhat-order computations in the "
            "affine Weyl group of type A2~"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kl", help="KL polynomial of a pair of words")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument(
        "--via",
        choices=["formula", "recursion", "both"],
        default="both",
        help="computation route; 'both' cross-checks and exits 2 on disagreement",
    )
    p.set_defaults(func=_cmd_kl)

    p = sub.add_parser("classify", help="region tag of a word")
    p.add_argument("word")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("interval", help="Bruhat interval [x, y]")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_interval)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["conjecture", "closed-forms", "lemmas", "all"])
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json-out")
    p.add_argument("--csv-out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("census", help="isomorphism classes per interval length")
    p.add_argument("--max-length", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("render", help="SVG of the alcove picture")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--regions", action="store_true")
    group.add_argument("--interval", nargs=2, metavar=("X", "Y"))
    p.add_argument("--radius", type=int, default=6)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except weyl.ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except cache_mod.CacheFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
