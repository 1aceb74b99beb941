"""Command-line surface.

Subcommands: ``cliff`` (index tables), ``h0`` (global-section caps),
``plot`` (SVG of the slice geometry), ``verify`` (grid suites).  Rational
values are exact in JSON/CSV (numerator/denominator fields); the decimal
column is display-only.  Exit codes: 0 success, 1 hypothesis violation,
2 verification failure (and argparse usage errors), 3 I/O trouble.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .clifford import CliffordQuery, clifford_index_k3, lm_construction
from .errors import DomainError
from .hn_polygon import h0_closed_form_bound
from .lattice import PushforwardSpec, SurfaceK3
from .numerics import _frac
from .plane_curves import clifford_plane, h0_bound_plane
from .svgplot import render_k3, render_p2
from .verifier import SUITES, GridSpec, run_suite

SCHEMA = "cliff-walls/1"


def _decimal(x: Fraction, digits: int) -> str:
    x = _frac(x)
    scale = 10 ** digits
    n = round(x * scale)
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // scale}.{n % scale:0{digits}d}"


def _emit(text: str, path) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _record_text(record: dict, fmt: str, precision: int) -> str:
    if fmt == "json":
        return json.dumps(record, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        keys = sorted(record)
        writer.writerow(keys)
        writer.writerow([record[k] for k in keys])
        return buf.getvalue()
    # table
    lines = [f"{k} = {record[k]}" for k in sorted(record)]
    return "\n".join(lines) + "\n"


def _value_fields(value: Fraction, precision: int) -> dict:
    value = _frac(value)
    return {
        "value_num": value.numerator,
        "value_den": value.denominator,
        "value_decimal": _decimal(value, precision),
    }


def cmd_cliff(args) -> int:
    if args.surface == "k3":
        value = clifford_index_k3(CliffordQuery(args.r, args.g))
        valid = True
        provenance = "closed-form"
        if args.r >= 2:
            lm = lm_construction(CliffordQuery(args.r, args.g))
            valid = lm.valid
            if not lm.valid:
                provenance = "closed-form (construction unavailable at this genus)"
        params = {"r": args.r, "g": args.g}
    else:
        result = clifford_plane(args.r, args.l)
        value = result.value
        valid = result.record_all_true
        provenance = "plane-cases"
        params = {"r": args.r, "l": args.l}
    record = {"schema": SCHEMA, "surface": args.surface, "params": params,
              "valid": valid, "provenance": provenance}
    record.update(_value_fields(value, args.precision))
    if args.format == "csv":
        record["params"] = json.dumps(params, sort_keys=True)
    _emit(_record_text(record, args.format, args.precision), args.out)
    return 0


def cmd_h0(args) -> int:
    if args.surface == "k3":
        report = h0_closed_form_bound(PushforwardSpec(args.r, args.d),
                                      SurfaceK3(args.g))
        params = {"d": args.d, "g": args.g, "r": args.r}
    else:
        report = h0_bound_plane(args.r, args.d, args.l)
        params = {"d": args.d, "l": args.l, "r": args.r}
    record = {"schema": SCHEMA, "surface": args.surface, "params": params,
              "valid": True, "provenance": report.provenance,
              "integer_cap": report.integer_bound}
    record.update(_value_fields(report.value, args.precision))
    if args.format == "csv":
        record["params"] = json.dumps(params, sort_keys=True)
    _emit(_record_text(record, args.format, args.precision), args.out)
    return 0


def cmd_plot(args) -> int:
    if args.surface == "k3":
        svg = render_k3(args.r, args.d, args.g)
    else:
        svg = render_p2(args.r, args.d, args.l)
    _emit(svg, args.out)
    return 0


def cmd_verify(args) -> int:
    ranges = {}
    if args.rmin is not None or args.rmax is not None:
        ranges["r"] = (args.rmin if args.rmin is not None else 1,
                       args.rmax if args.rmax is not None else 8)
    if args.gmin is not None or args.gmax is not None:
        ranges["g"] = (args.gmin if args.gmin is not None else 4,
                       args.gmax if args.gmax is not None else 100)
    if args.lmin is not None or args.lmax is not None:
        ranges["l"] = (args.lmin if args.lmin is not None else 5,
                       args.lmax if args.lmax is not None else 40)
    report = run_suite(GridSpec(args.suite, ranges))
    record = {
        "schema": SCHEMA,
        "suite": report.suite,
        "checked": report.checked,
        "skipped": report.skipped,
        "failures": [
            {"params": [str(p) for p in f.params],
             "lhs_num": f.lhs.numerator, "lhs_den": f.lhs.denominator,
             "rhs_num": f.rhs.numerator, "rhs_den": f.rhs.denominator,
             "note": f.note}
            for f in report.failures
        ],
        "passed": report.passed,
    }
    if args.format == "json":
        text = json.dumps(record, sort_keys=True, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "checked", "skipped", "passed",
                         "failure_params", "lhs", "rhs", "note"])
        if report.failures:
            for f in report.failures:
                writer.writerow([report.suite, report.checked, report.skipped,
                                 report.passed, json.dumps([str(p) for p in f.params]),
                                 f"{f.lhs.numerator}/{f.lhs.denominator}",
                                 f"{f.rhs.numerator}/{f.rhs.denominator}", f.note])
        else:
            writer.writerow([report.suite, report.checked, report.skipped,
                             report.passed, "", "", "", ""])
        text = buf.getvalue()
    else:
        lines = [report.summary()]
        for f in report.failures:
            lines.append(f"  FAIL {f.params}: {f.lhs} vs {f.rhs} ({f.note})")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if report.passed else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffwalls",
        description="Exact wall geometry and Clifford-index bounds for "
                    "curves on a K3 surface and in the plane.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["table", "json", "csv"],
                       default="table")
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument("--precision", type=int, default=6,
                       help="decimal display digits (display only)")

    p_cliff = sub.add_parser("cliff", help="rank-r Clifford index")
    p_cliff.add_argument("surface", choices=["k3", "p2"])
    p_cliff.add_argument("--r", type=int, required=True)
    p_cliff.add_argument("--g", type=int, help="genus (k3)")
    p_cliff.add_argument("--l", type=int, help="plane curve degree (p2)")
    common(p_cliff)
    p_cliff.set_defaults(func=cmd_cliff)

    p_h0 = sub.add_parser("h0", help="global-section cap")
    p_h0.add_argument("surface", choices=["k3", "p2"])
    p_h0.add_argument("--r", type=int, required=True)
    p_h0.add_argument("--d", type=int, required=True)
    p_h0.add_argument("--g", type=int, help="genus (k3)")
    p_h0.add_argument("--l", type=int, help="plane curve degree (p2)")
    common(p_h0)
    p_h0.set_defaults(func=cmd_h0)

    p_plot = sub.add_parser("plot", help="SVG of the slice geometry")
    p_plot.add_argument("surface", choices=["k3", "p2"])
    p_plot.add_argument("--r", type=int, required=True)
    p_plot.add_argument("--d", type=int, required=True)
    p_plot.add_argument("--g", type=int, help="genus (k3)")
    p_plot.add_argument("--l", type=int, help="plane curve degree (p2)")
    p_plot.add_argument("--out", required=True, help="output SVG path")
    p_plot.set_defaults(func=cmd_plot)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    for flag in ("rmin", "rmax", "gmin", "gmax", "lmin", "lmax"):
        p_verify.add_argument(f"--{flag}", type=int, default=None)
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def _require(args, parser) -> None:
    needs = {"k3": "g", "p2": "l"}
    if getattr(args, "surface", None) in needs:
        key = needs[args.surface]
        if getattr(args, key, None) is None:
            parser.error(f"surface {args.surface} requires --{key}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("cliff", "h0", "plot"):
        _require(args, parser)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
