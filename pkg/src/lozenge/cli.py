"""Command line front end.

Subcommands: ``count`` (oracle / determinant / closed formula), ``formula``
(evaluate any of the product formulas), ``macmahon`` (boxed plane
partitions), ``verify`` (identity sweeps with RESULT lines), ``render``
(ASCII or SVG), and ``cut`` (split a mirror-symmetric region).  Exact
values print as ``p/q`` or a bare integer.  Exit codes: 0 success,
1 verification mismatch, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import verify as V
from .count import NORTHWEST, SOUTHWEST, count_gv, count_oracle
from .exact import format_rational
from .formulas import b_poly, bar_b_poly, bar_c_const, bar_p_poly, c_const, macmahon, p_poly
from .lattice import Region, region_from_text, region_to_text, symmetry_axis_cut
from .regions import (
    HexParams,
    WindowSpec,
    check_index_list,
    hexagon,
    r_bar_region,
    r_region,
    windowed_hexagon,
)
from .render import first_tiling, render_ascii, render_svg


class UsageError(Exception):
    pass


def parse_index_list(text: str, name: str):
    if text in ("", "-"):
        return ()
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--{name} expects comma-separated integers, got {text!r}") from exc
    try:
        return check_index_list(values, name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_window(text: str) -> WindowSpec:
    try:
        kind_txt, rest = text.split(":", 1)
        size_txt, row_txt = rest.split("@", 1)
        kind = {"D": "DELTA", "N": "NABLA"}[kind_txt]
        return WindowSpec(kind, int(size_txt), int(row_txt))
    except (ValueError, KeyError) as exc:
        raise UsageError(
            f"--window expects D:<size>@<row> or N:<size>@<row>, got {text!r}"
        ) from exc


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError as exc:
        raise UsageError(f"expected a rational like 7 or 7/2, got {text!r}") from exc


def build_region_from_args(args) -> tuple[Region, dict]:
    """Region plus the constructor metadata the subcommands need."""
    if getattr(args, "infile", None):
        with open(args.infile, "r", encoding="utf-8") as fh:
            return region_from_text(fh.read()), {"family": "file"}
    family = args.family
    if family in ("R", "Rbar"):
        l = parse_index_list(args.l or "-", "l")
        q = parse_index_list(args.q or "-", "q")
        if args.x is None:
            raise UsageError("--x is required for the R and Rbar families")
        builder = r_region if family == "R" else r_bar_region
        try:
            reg = builder(l, q, args.x)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return reg, {"family": family, "l": l, "q": q, "x": args.x}
    if family == "H":
        if args.a is None or args.b is None or args.k is None:
            raise UsageError("--a, --b and --k are required for the H family")
        windows = [parse_window(w) for w in args.window or []]
        params = HexParams(args.a, args.b, args.k)
        if not windows and args.k > 0:
            # the bare unbalanced hexagon is a legal region (with no tilings)
            return hexagon(params), {"family": "H_plain"}
        try:
            reg, fam, l, q = windowed_hexagon(params, windows)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return reg, {"family": fam, "l": l, "q": q, "hex": (args.a, args.b, args.k), "windows": windows}
    raise UsageError(f"unknown family {family!r}")


def add_region_flags(sub: argparse.ArgumentParser):
    sub.add_argument("--family", choices=["R", "Rbar", "H"], help="region family")
    sub.add_argument("--l", help="lower bump labels, comma separated (or '-')")
    sub.add_argument("--q", help="upper bump labels, comma separated (or '-')")
    sub.add_argument("--x", type=int, help="base length parameter")
    sub.add_argument("--a", type=int, help="hexagon top side")
    sub.add_argument("--b", type=int, help="hexagon lower-left side")
    sub.add_argument("--k", type=int, help="hexagon imbalance")
    sub.add_argument(
        "--window", action="append", metavar="D:SIZE@ROW",
        help="triangular window (repeatable); D points up, N points down",
    )
    sub.add_argument("--in", dest="infile", help="read the region from a TRIREGION file")


def cmd_count(args) -> int:
    reg, meta = build_region_from_args(args)
    if args.method == "oracle":
        value = count_oracle(reg)
    elif args.method == "gv":
        if meta.get("family") not in ("R", "Rbar"):
            raise UsageError("the determinant method applies to the R and Rbar families only")
        value = count_gv(reg, meta["l"], meta["q"], meta["x"], meta["family"], args.side)
    elif args.method == "formula":
        fam = meta.get("family")
        if fam == "R":
            value = p_poly(meta["l"], meta["q"], meta["x"])
        elif fam == "Rbar":
            value = bar_p_poly(meta["l"], meta["q"], meta["x"])
        elif fam in ("H_l", "H_lq", "Hbar_lq"):
            a, b, k = meta["hex"]
            rep = V.verify_hexagon_formula(HexParams(a, b, k), meta["windows"])
            cut = symmetry_axis_cut(reg)
            value = rep.values["rhs"] * 2**cut.width
        else:
            raise UsageError("the formula method needs a constructed family, not a file")
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown method {args.method}")
    print(format_rational(value))
    return 0


def cmd_formula(args) -> int:
    which = args.which
    if which in ("P", "Pbar"):
        l = parse_index_list(args.l or "-", "l")
        q = parse_index_list(args.q or "-", "q")
        x = parse_rational(args.x if args.x is not None else "0")
        value = (p_poly if which == "P" else bar_p_poly)(l, q, x)
    elif which in ("B", "Bbar"):
        if args.m is None or args.n is None:
            raise UsageError("--m and --n are required for B and Bbar")
        x = parse_rational(args.x if args.x is not None else "0")
        value = (b_poly if which == "B" else bar_b_poly)(args.m, args.n, x)
    elif which in ("c", "cbar"):
        l = parse_index_list(args.l or "-", "l")
        q = parse_index_list(args.q or "-", "q")
        value = (c_const if which == "c" else bar_c_const)(l, q)
    else:  # pragma: no cover
        raise UsageError(f"unknown formula {which!r}")
    print(format_rational(value))
    return 0


def cmd_macmahon(args) -> int:
    print(macmahon(args.a, args.b, args.c))
    return 0


def cmd_render(args) -> int:
    reg, _ = build_region_from_args(args)
    tiling = None
    if args.tiling == "first":
        tiling = first_tiling(reg)
        if tiling is None:
            raise UsageError("region has no tiling to draw")
    if args.format == "ascii":
        text = render_ascii(reg)
    else:
        text = render_svg(reg, tiling)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_cut(args) -> int:
    reg, _ = build_region_from_args(args)
    try:
        cut = symmetry_axis_cut(reg)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(f"width {cut.width}")
    for path, piece in ((args.out_plus, cut.plus), (args.out_minus, cut.minus)):
        if path:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(region_to_text(piece))
    return 0


def cmd_verify(args) -> int:
    reports = []

    def run(reps):
        for rep in reps:
            reports.append(rep)
            print(rep.line())

    targets = (
        ["theorem11", "prop21", "recurrences", "boundary", "poly", "increments", "factorization"]
        if args.target == "all"
        else [args.target]
    )
    pair_args = dict(max_entry=args.max_entry, max_len=args.max_len)
    if "prop21" in targets:
        run(V.sweep_region_formula(x_extra=args.x_extra, **pair_args))
    if "recurrences" in targets:
        run(V.sweep_count_recurrences(x_extra=args.x_extra, **pair_args))
    if "boundary" in targets:
        run(V.sweep_boundary_reductions(**pair_args))
    if "poly" in targets:
        run(V.sweep_poly_recurrences(**pair_args))
    if "increments" in targets:
        run(V.sweep_increment_relations(count=args.random_count, seed=args.seed))
    if "theorem11" in targets or "factorization" in targets:
        do_t = "theorem11" in targets
        do_f = "factorization" in targets
        run(
            V.sweep_hexagons(
                max_a=args.max_a, max_b=args.max_b, max_k=args.max_k,
                product=do_t, factorization=do_f, pieces=do_f,
            )
        )
    mismatches = sum(1 for rep in reports if not rep.match)
    print(f"SUMMARY total={len(reports)} mismatches={mismatches}")
    return 1 if mismatches else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="lozenge",
        description="Exact weighted lozenge-tiling counts for hexagons with "
        "triangular holes and their zigzag-anchored reductions.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_count = subs.add_parser("count", help="count weighted tilings of one region")
    add_region_flags(p_count)
    p_count.add_argument("--method", choices=["oracle", "gv", "formula"], default="oracle")
    p_count.add_argument("--side", choices=[SOUTHWEST, NORTHWEST], default=SOUTHWEST)
    p_count.set_defaults(func=cmd_count)

    p_formula = subs.add_parser("formula", help="evaluate a closed formula")
    p_formula.add_argument("--which", choices=["P", "Pbar", "B", "Bbar", "c", "cbar"], required=True)
    p_formula.add_argument("--l")
    p_formula.add_argument("--q")
    p_formula.add_argument("--m", type=int)
    p_formula.add_argument("--n", type=int)
    p_formula.add_argument("--x", help="rational argument, e.g. 3 or 7/2")
    p_formula.set_defaults(func=cmd_formula)

    p_mac = subs.add_parser("macmahon", help="boxed plane partition count")
    p_mac.add_argument("a", type=int)
    p_mac.add_argument("b", type=int)
    p_mac.add_argument("c", type=int)
    p_mac.set_defaults(func=cmd_macmahon)

    p_verify = subs.add_parser("verify", help="run identity sweeps")
    p_verify.add_argument(
        "--target",
        choices=["theorem11", "prop21", "recurrences", "boundary", "poly",
                 "increments", "factorization", "all"],
        default="all",
    )
    p_verify.add_argument("--max-entry", type=int, default=3)
    p_verify.add_argument("--max-len", type=int, default=2)
    p_verify.add_argument("--x-extra", type=int, default=2)
    p_verify.add_argument("--max-a", type=int, default=3)
    p_verify.add_argument("--max-b", type=int, default=2)
    p_verify.add_argument("--max-k", type=int, default=3)
    p_verify.add_argument("--random-count", type=int, default=20)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=cmd_verify)

    p_render = subs.add_parser("render", help="draw a region")
    add_region_flags(p_render)
    p_render.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p_render.add_argument("--tiling", choices=["none", "first"], default="none")
    p_render.add_argument("--out")
    p_render.set_defaults(func=cmd_render)

    p_cut = subs.add_parser("cut", help="split a mirror-symmetric region")
    add_region_flags(p_cut)
    p_cut.add_argument("--out-plus")
    p_cut.add_argument("--out-minus")
    p_cut.set_defaults(func=cmd_cut)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
