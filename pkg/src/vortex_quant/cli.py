"""Command line front end.

Exit status: 0 on success, 1 for bad input, 2 when a value was computed but
the vanishing hypothesis does not hold (so it is only an Euler characteristic).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from .classes import (
    CohomologyClass,
    ModuliParams,
    canonical_class,
    is_integral,
    kahler_class,
    line_bundle_class,
    tangent_chern,
)
from .hrr import DimensionReport, METHODS, vortex_dimension
from .oracle import OracleSizeError, verify_reduced_ring

EXIT_OK, EXIT_INPUT, EXIT_UNGUARANTEED = 0, 1, 2
DEFAULT_MAX_GRID = 10**5
CSV_COLUMNS = [
    "genus",
    "vortices",
    "area_quanta",
    "euler_characteristic",
    "closed_form",
    "dimension",
    "agree",
    "vanishing_guaranteed",
    "method",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


_AREA_RE = re.compile(r"^\s*4\s*\*?\s*pi\s*\*\s*(.+)$")


def parse_area(text: str) -> Fraction:
    """``4pi*k`` -> ``k``; the area is only accepted as a multiple of 4π."""
    m = _AREA_RE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(
            f"area must be written as 4pi*k, got {text!r}"
        )
    return parse_rational(m.group(1))


def parse_range(text: str) -> range:
    """Inclusive integer range ``a..b`` (or a single integer)."""
    m = re.fullmatch(r"\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected a range like 0..4, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    return range(lo, hi + 1)


def _class_dict(c: CohomologyClass) -> dict:
    return {
        "eta": str(c.eta_coeff),
        "sigma": [str(b) for b in c.sigma_coeffs],
        "text": str(c),
    }


def report_to_dict(r: DimensionReport) -> dict:
    p = r.params
    d = {
        "genus": p.genus,
        "vortices": p.vortices,
        "area_quanta": str(p.area_quanta),
        "euler_characteristic": str(r.euler_characteristic),
        "vanishing_guaranteed": r.vanishing_guaranteed,
        "method": r.method,
        "kahler_class": _class_dict(kahler_class(p)),
        "line_bundle_class": _class_dict(line_bundle_class(p)),
        "tangent_class": _class_dict(tangent_chern(p)),
        "notes": list(r.notes),
    }
    if r.dimension is not None:
        d["dimension"] = str(r.dimension)
    if r.closed_form is not None:
        d["closed_form"] = str(r.closed_form)
        d["agree"] = r.agree
    return d


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _csv_row(d: dict) -> list[str]:
    out = []
    for col in CSV_COLUMNS:
        v = d.get(col, "")
        out.append(str(v).lower() if isinstance(v, bool) else str(v))
    return out


def to_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for d in rows:
        w.writerow(_csv_row(d))
    return buf.getvalue()


def format_human(r: DimensionReport) -> str:
    p = r.params
    kc, lc, tc = kahler_class(p), line_bundle_class(p), tangent_chern(p)
    lines = [
        f"genus g = {p.genus}, vortices N = {p.vortices}, area A = 4π·{p.area_quanta}",
        f"  [ω_MN]/4π      = {kc}",
        f"  c_1(L)         = {lc}",
        f"  c_1(TX)        = {tc}",
        f"  [ω_MN]/4π + c_1(TX) = {kc + tc}",
        f"  Euler characteristic = {r.euler_characteristic}",
    ]
    if r.closed_form is not None:
        lines.append(f"  C(k, N)        = {r.closed_form}  (agree: {r.agree})")
    if r.dimension is not None:
        lines.append(f"  dimension      = {r.dimension}")
    for n in r.notes:
        lines.append(f"  note: {n}")
    return "\n".join(lines)


def _params(args) -> ModuliParams:
    k = args.area_quanta if args.area_quanta is not None else args.area
    if k is None:
        raise UsageError("one of --area-quanta/-k or --area is required")
    if args.genus < 0:
        raise UsageError(f"genus must be nonnegative, got {args.genus}")
    if args.vortices < 1:
        raise UsageError(f"vortices must be positive, got {args.vortices}")
    if k <= 0:
        raise UsageError(f"area quanta must be positive, got {k}")
    return ModuliParams(args.genus, args.vortices, k)


def cmd_dimension(args, out) -> int:
    p = _params(args)
    if not is_integral(p):
        print(
            f"error: area quanta k = {p.area_quanta} is not a positive integer; "
            "the Manton-Nasir form is integral only for A = 4πk with k a positive integer",
            file=sys.stderr,
        )
        return EXIT_INPUT
    r = vortex_dimension(p, method=args.method)
    d = report_to_dict(r)
    if args.format == "json":
        print(dumps(d), file=out)
    elif args.format == "csv":
        print(to_csv([d]), end="", file=out)
    else:
        print(format_human(r), file=out)
    if not r.vanishing_guaranteed:
        print(
            "warning: k > max(N, g-1) fails; reporting the holomorphic Euler "
            "characteristic, not a dimension",
            file=sys.stderr,
        )
        return EXIT_UNGUARANTEED
    return EXIT_OK


def table_rows(genus: range, vortices: range, quanta: range, method: str = "hrr_ring") -> list[dict]:
    rows = []
    for g in genus:
        for n in vortices:
            for k in quanta:
                rows.append(report_to_dict(vortex_dimension(ModuliParams(g, n, k), method)))
    return rows


def cmd_table(args, out) -> int:
    gs, ns, ks = args.genus, args.vortices, args.area_quanta
    size = len(gs) * len(ns) * len(ks)
    if size > args.max_grid:
        print(f"error: grid has {size} points, cap is {args.max_grid}", file=sys.stderr)
        return EXIT_INPUT
    if size and (gs[0] < 0 or ns[0] < 1 or ks[0] < 1):
        print("error: need genus >= 0, vortices >= 1, area quanta >= 1", file=sys.stderr)
        return EXIT_INPUT
    rows = table_rows(gs, ns, ks, args.method)
    if args.format == "json":
        print(dumps(rows), file=out)
    elif args.format == "csv":
        print(to_csv(rows), end="", file=out)
    else:
        widths = [max(len(c), 6) for c in CSV_COLUMNS]
        print("  ".join(c.rjust(w) for c, w in zip(CSV_COLUMNS, widths)), file=out)
        for d in rows:
            print("  ".join(v.rjust(w) for v, w in zip(_csv_row(d), widths)), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        rep = verify_reduced_ring(args.genus, args.vortices)
    except OracleSizeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        print(
            dumps(
                {
                    "genus": rep.genus,
                    "vortices": rep.points,
                    "pairs_checked": rep.pairs_checked,
                    "discrepancies": [
                        {"left": str(a), "right": str(b), "reduced": str(x), "oracle": str(y)}
                        for a, b, x, y in rep.discrepancies
                    ],
                }
            ),
            file=out,
        )
    else:
        for a, b, x, y in rep.discrepancies:
            print(f"  {a} * {b}: reduced {x}, oracle {y}", file=out)
        print(
            f"{len(rep.discrepancies)} discrepancies "
            f"({rep.pairs_checked} monomial pairs, g={rep.genus}, N={rep.points})",
            file=out,
        )
    return EXIT_OK if rep.ok else EXIT_INPUT


def cmd_classes(args, out) -> int:
    p = _params(args)
    cs = {
        "kahler_class": kahler_class(p),
        "line_bundle_class": line_bundle_class(p),
        "tangent_class": tangent_chern(p),
        "canonical_class": canonical_class(p),
    }
    if args.format == "json":
        d = {name: _class_dict(c) for name, c in cs.items()}
        d.update(genus=p.genus, vortices=p.vortices, area_quanta=str(p.area_quanta))
        print(dumps(d), file=out)
    else:
        for name, c in cs.items():
            print(f"{name:18s} {c}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="vortex-quant",
        description="Dimension of the quantum Hilbert space of N vortices on a genus g surface.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def point_flags(sp):
        sp.add_argument("--genus", "-g", type=int, required=True)
        sp.add_argument("--vortices", "-n", type=int, required=True)
        area = sp.add_mutually_exclusive_group()
        area.add_argument("--area-quanta", "-k", type=parse_rational, help="k = A/4π, e.g. 5 or 7/2")
        area.add_argument("--area", type=parse_area, help="area written as 4pi*k")

    d = sub.add_parser("dimension", help="dimension for one (g, N, k)")
    point_flags(d)
    d.add_argument("--method", choices=METHODS, default="hrr_ring")
    d.add_argument("--format", choices=("human", "json", "csv"), default="human")
    d.set_defaults(func=cmd_dimension)

    t = sub.add_parser("table", help="grid of dimensions")
    t.add_argument("--genus", "-g", type=parse_range, required=True)
    t.add_argument("--vortices", "-n", type=parse_range, required=True)
    t.add_argument("--area-quanta", "-k", type=parse_range, required=True)
    t.add_argument("--method", choices=METHODS, default="hrr_ring")
    t.add_argument("--format", choices=("human", "json", "csv"), default="human")
    t.add_argument("--max-grid", type=int, default=DEFAULT_MAX_GRID)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="check the reduced ring against the tensor-ring oracle")
    v.add_argument("--genus", "-g", type=int, required=True)
    v.add_argument("--vortices", "-n", type=int, required=True)
    v.add_argument("--format", choices=("human", "json"), default="human")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classes", help="print the Kähler, line bundle, tangent and canonical classes")
    point_flags(c)
    c.add_argument("--format", choices=("human", "json"), default="human")
    c.set_defaults(func=cmd_classes)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
