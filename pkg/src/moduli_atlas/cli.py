"""Command line front end.

Subcommands: classify-tf, classify-bn, scan, polygon, verify.  Exit codes:
0 success, 2 usage or domain error, 3 arithmetic overflow, 4 I/O error.
(Python integers are unbounded, so exit 3 exists for interface completeness
and for embedders that bound the arithmetic.)  An optional JSON config file,
named by the MODULI_ATLAS_CONFIG environment variable, can preset defaults
for h2, format, threshold, m_max and the output directory; explicit flags
win over the config.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .brill_noether import BNInput, classify_bn
from .lattice import MukaiVector, Surface
from .oracle import DEFAULT_GRID, GridSpec, sweep
from .polygon import polygon_svg
from .report import (
    bn_record,
    render_csv,
    render_json,
    render_scan_csv,
    render_scan_json,
    render_text,
    scan_rows,
    tf_record,
)
from .torsion_free import DEFAULT_THRESHOLD, classify_tf_components
from .version import VERSION

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_IO = 4

CONFIG_ENV = "MODULI_ATLAS_CONFIG"
CONFIG_KEYS = {"h2", "format", "out_dir", "threshold", "m_max"}


def load_config() -> dict:
    path = os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ValueError(f"cannot read config file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid config file: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError("invalid config file: expected a JSON object")
    unknown = set(data) - CONFIG_KEYS
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return data


def _setting(flag_value, config: dict, key: str, default=None):
    if flag_value is not None:
        return flag_value
    if key in config:
        return config[key]
    return default


def _surface(args, config: dict) -> Surface:
    h2 = _setting(args.h2, config, "h2")
    if h2 is None:
        raise ValueError("missing --h2")
    return Surface(int(h2))


def _vector(args, s: Surface) -> MukaiVector:
    if args.a is None and args.c2 is None:
        raise ValueError("one of --a or --c2 is required")
    if args.a is not None:
        return MukaiVector(2, args.deg, args.a)
    return MukaiVector(2, args.deg, (args.deg * args.deg * s.h_squared) // 2 + 2 - args.c2)


def _window(args, config: dict, deg: int) -> int:
    return int(_setting(args.m_max, config, "m_max", (deg + 1) // 2 + 8))


def _threshold(args, config: dict) -> int:
    return int(_setting(args.threshold, config, "threshold", DEFAULT_THRESHOLD))


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"invalid range {text!r}: expected A..B")
    try:
        pair = (int(lo), int(hi))
    except ValueError:
        raise ValueError(f"invalid range {text!r}: expected integers") from None
    if pair[0] > pair[1]:
        raise ValueError("empty range")
    return pair


def _render_record(record, fmt: str) -> str:
    if fmt == "text":
        return render_text(record)
    if fmt == "json":
        return render_json(record)
    if fmt == "csv":
        return render_csv(record)
    raise ValueError(f"unknown format {fmt!r}")


def _write_output(args, config: dict, content: str) -> str:
    path = args.out
    out_dir = config.get("out_dir")
    if out_dir and not os.path.isabs(path):
        path = os.path.join(out_dir, path)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(content)
    return path


def cmd_classify_tf(args, config: dict) -> int:
    s = _surface(args, config)
    v = _vector(args, s)
    m_max = _window(args, config, v.deg)
    threshold = _threshold(args, config)
    comps = classify_tf_components(s, v, m_max, threshold)
    record = tf_record(s, v, comps, m_max, threshold, include_absorbed=args.verbose)
    fmt = _setting(args.format, config, "format", "text")
    sys.stdout.write(_render_record(record, fmt))
    return EXIT_OK


def cmd_classify_bn(args, config: dict) -> int:
    s = _surface(args, config)
    threshold = _threshold(args, config)
    inp = BNInput(s, args.n, args.N)
    record = bn_record(inp, classify_bn(inp, threshold), threshold)
    fmt = _setting(args.format, config, "format", "text")
    sys.stdout.write(_render_record(record, fmt))
    return EXIT_OK


def cmd_scan(args, config: dict) -> int:
    s = _surface(args, config)
    threshold = _threshold(args, config)
    rows = scan_rows(s, _parse_range(args.n_range), _parse_range(args.N_range), threshold)
    fmt = _setting(args.format, config, "format", "csv")
    if fmt == "csv":
        content = render_scan_csv(rows)
    elif fmt == "json":
        content = render_scan_json(rows)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    path = _write_output(args, config, content)
    print(f"{len(rows)} rows -> {path}")
    return EXIT_OK


def cmd_polygon(args, config: dict) -> int:
    s = _surface(args, config)
    v = _vector(args, s)
    m_max = _window(args, config, v.deg)
    threshold = _threshold(args, config)
    comps = classify_tf_components(s, v, m_max, threshold)
    path = _write_output(args, config, polygon_svg(s, v, comps, m_max))
    print(f"polygon -> {path}")
    return EXIT_OK


def cmd_verify(args, config: dict) -> int:
    h2s = tuple(args.h2) if args.h2 else DEFAULT_GRID.h_squared_values
    grid = GridSpec(
        h2s,
        _parse_range(args.n_range),
        _parse_range(args.N_range),
        args.margin,
    )
    thresholds = [args.threshold] if args.threshold is not None else [1, -1]
    total = 0
    for threshold in thresholds:
        records = sweep(grid, threshold)
        print(f"threshold {threshold}: {len(records)} discrepancies")
        for record in records[:20]:
            print(f"  {record}")
        total += len(records)
    return EXIT_OK if total == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moduli-atlas",
        description="Exact classification of rank-2 torsion-free moduli components "
        "and of Brill-Noether loci of point Hilbert schemes on a Picard-rank-1 K3.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    tf = sub.add_parser("classify-tf", help="strata of the rank-2 torsion-free stack")
    tf.add_argument("--h2", type=int, help="self-intersection of the ample generator")
    tf.add_argument("--deg", type=int, required=True, help="degree entry of the vector")
    group = tf.add_mutually_exclusive_group()
    group.add_argument("--a", type=int, help="trailing entry of the vector")
    group.add_argument("--c2", type=int, help="second Chern number instead of --a")
    tf.add_argument("--m-max", type=int, dest="m_max", help="enumeration window (default ceil(deg/2)+8)")
    tf.add_argument("--threshold", type=int, help="absorption threshold (default 1)")
    tf.add_argument("--format", choices=("text", "json", "csv"))
    tf.add_argument("--verbose", action="store_true", help="include absorbed strata")
    tf.set_defaults(func=cmd_classify_tf)

    bn = sub.add_parser("classify-bn", help="components of the locus W in Hilb^N")
    bn.add_argument("--h2", type=int)
    bn.add_argument("--n", type=int, required=True, help="twist degree")
    bn.add_argument("--N", type=int, required=True, help="subscheme length")
    bn.add_argument("--threshold", type=int)
    bn.add_argument("--format", choices=("text", "json", "csv"))
    bn.set_defaults(func=cmd_classify_bn)

    scan = sub.add_parser("scan", help="classify a rectangle of (n, N) to a table")
    scan.add_argument("--h2", type=int)
    scan.add_argument("--n-range", required=True, help="inclusive range A..B")
    scan.add_argument("--N-range", required=True, help="inclusive range A..B")
    scan.add_argument("--threshold", type=int)
    scan.add_argument("--format", choices=("csv", "json"))
    scan.add_argument("--out", required=True, help="output file")
    scan.set_defaults(func=cmd_scan)

    poly = sub.add_parser("polygon", help="SVG of the filtration polygons")
    poly.add_argument("--h2", type=int)
    poly.add_argument("--deg", type=int, required=True)
    group = poly.add_mutually_exclusive_group()
    group.add_argument("--a", type=int)
    group.add_argument("--c2", type=int)
    poly.add_argument("--m-max", type=int, dest="m_max")
    poly.add_argument("--threshold", type=int)
    poly.add_argument("--out", required=True, help="output file")
    poly.set_defaults(func=cmd_polygon)

    verify = sub.add_parser("verify", help="sweep the oracle grid and report discrepancies")
    verify.add_argument("--h2", type=int, action="append", help="repeatable; default 2 4 6")
    verify.add_argument("--n-range", default="0..8")
    verify.add_argument("--N-range", default="0..40")
    verify.add_argument("--margin", type=int, default=4, help="window above n at each point")
    verify.add_argument("--threshold", type=int, help="default: check both 1 and -1")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        config = load_config()
        return args.func(args, config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OverflowError as exc:
        print(f"error: arithmetic overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
