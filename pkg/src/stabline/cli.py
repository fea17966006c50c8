"""Command line interface.

    stabline check  --input family.json
    stabline select --algorithm s3 --format text < family.json
    stabline dual   --input family.json
    stabline render --mode dual --out dual.svg --input family.json
    stabline oracle --grid-resolution 1/400 --input family.json

Exit codes: 0 success, 1 invalid input, 2 oracle mismatch, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .exceptions import OracleMismatch, ValidationError
from .geometry import format_rational, parse_rational
from .io import parse_instance, run_report
from .oracles import oracle_check
from .svg import render_svg

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_ORACLE = 2
EXIT_IO = 3


def _common(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--input", "-i", metavar="FILE", default=default,
                        help="instance file (default: standard input)")
    parser.add_argument("--format", "-f", choices=("json", "text"),
                        default=argparse.SUPPRESS if suppress else "json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stabline", description="Common transversals of vertical segments.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide existence and uniqueness of a transversal")
    _common(p, suppress=True)

    p = sub.add_parser("select", help="compute the selected transversals")
    _common(p, suppress=True)
    p.add_argument("--algorithm", "-a", choices=("s1", "s2", "s3", "all"), default="all")

    p = sub.add_parser("dual", help="dual feasibility polygon and its area")
    _common(p, suppress=True)

    p = sub.add_parser("render", help="write an SVG drawing")
    _common(p, suppress=True)
    p.add_argument("--mode", choices=("primal", "dual"), default="primal")
    p.add_argument("--out", "-o", metavar="FILE.svg", help="output file (default: standard output)")

    p = sub.add_parser("oracle", help="cross-check against independent oracles")
    _common(p, suppress=True)
    p.add_argument("--grid-resolution", default="1/400", metavar="Q",
                   help="grid spacing of the centroid oracle, as n/d (default 1/400)")
    return parser


def _read_input(path):
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


KEYS = {
    "check": ("classification", "r", "p", "certificate"),
    "dual": ("classification", "polygon", "area", "certificate"),
}


def _oracle_dict(report) -> dict:
    d = {
        "existence": report.existence,
        "existence_agrees": report.existence_agrees,
        "region_agrees": report.region_agrees,
        "centroid_agrees": report.centroid_agrees,
        "tolerance": format_rational(report.tolerance),
    }
    if report.grid is not None:
        d["grid_samples"] = report.grid.samples
        if report.grid.centroid is not None:
            d["grid_centroid"] = {"k": f"{float(report.grid.centroid.k):.6f}",
                                  "l": f"{float(report.grid.centroid.l):.6f}"}
    d["notes"] = list(report.notes)
    return d


def run(args, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        data = _read_input(args.input)
    except OSError as exc:
        print(f"stabline: cannot read input: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        doc = parse_instance(data)
        if args.command == "oracle":
            resolution = parse_rational(args.grid_resolution)
            if resolution <= 0:
                raise ValidationError("grid resolution must be positive")
            report = oracle_check(doc.family, resolution)
            d = _oracle_dict(report)
            if args.format == "json":
                out.write(json.dumps(d, indent=2) + "\n")
            else:
                out.write("".join(f"{k}: {v}\n" for k, v in d.items()))
            return EXIT_OK
        result = run_report(doc)
    except ValidationError as exc:
        print(f"stabline: invalid instance: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OracleMismatch as exc:
        print(f"stabline: oracle mismatch: {exc}", file=sys.stderr)
        print(f"stabline: instance: {[[str(v) for v in row] for row in exc.instance]}", file=sys.stderr)
        return EXIT_ORACLE

    if args.command == "render":
        svg = render_svg(doc, result, args.mode)
        if args.out:
            try:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(svg)
            except OSError as exc:
                print(f"stabline: cannot write {args.out}: {exc}", file=sys.stderr)
                return EXIT_IO
        else:
            out.write(svg)
        return EXIT_OK

    if args.command == "select":
        chosen = ("s1", "s2", "s3") if args.algorithm == "all" else (args.algorithm,)
        keys = ("classification", *chosen, "certificate")
    else:
        keys = KEYS[args.command]
    text = result.to_json(keys) if args.format == "json" else result.to_text(keys)
    out.write(text)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
