"""Command-line front end.

    postsel point --config F [--set k=v ...]
    postsel sweep --config F [--set k=v ...]
    postsel figure --preset ID --out F
    postsel validate --grid small|full --out DIR

Exit codes: 0 success, 1 config error, 2 compute error, 3 validation failure.
"""
from __future__ import annotations

import argparse
import sys

from . import config as cfgmod
from .errors import ComputeError, ConfigParseError
from .sweep import DEFAULT_PN_MAX, SweepSpec, point_table, run_sweep

EXIT_OK, EXIT_CONFIG, EXIT_COMPUTE, EXIT_VALIDATION = 0, 1, 2, 3


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", newline="", encoding="utf-8") as fh:
        fh.write(text)


def cmd_point(args) -> int:
    pairs = cfgmod.load(args.config, args.set)
    kind = cfgmod.pointer_kind(pairs)
    table = point_table(kind, cfgmod.parameters(pairs), cfgmod.integer(pairs, "dim"),
                        cfgmod.integer(pairs, "pn_max", DEFAULT_PN_MAX))
    _emit(table.to_csv(), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    spec = SweepSpec.from_pairs(cfgmod.load(args.config, args.set))
    _emit(run_sweep(spec, args.threads).to_csv(), args.out)
    return EXIT_OK


def cmd_figure(args) -> int:
    from .presets import run_figure

    _emit(run_figure(args.preset, args.threads).to_csv(), args.out)
    return EXIT_OK


def cmd_validate(args) -> int:
    from .analytic.validate import default_grid, validate_all, write_outputs

    reports, summary = validate_all(default_grid(args.grid), args.threads)
    paths = write_outputs(reports, args.out)
    print(f"{summary}; wrote {', '.join(paths)}")
    for r in reports:
        if r.status.value == "Fail":
            print(f"Fail {r.quantity.value} at {r.point}: err {r.abs_err:.3e}", file=sys.stderr)
    return EXIT_OK if summary.ok else EXIT_VALIDATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="postsel", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, config=True):
        if config:
            p.add_argument("--config", required=True, help="key = value configuration file")
            p.add_argument("--set", action="append", default=[], metavar="K=V", help="override a config field")
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--threads", type=int, default=None, help="worker threads (default: POSTSEL_THREADS or cpu count)")

    p = sub.add_parser("point", help="all observables at one parameter point")
    common(p)
    p.set_defaults(func=cmd_point)
    p = sub.add_parser("sweep", help="1D or 2D parameter sweep")
    common(p)
    p.set_defaults(func=cmd_sweep)
    p = sub.add_parser("figure", help="reproduce a figure panel as CSV")
    p.add_argument("--preset", required=True, help="fig1a ... fig9d")
    common(p, config=False)
    p.set_defaults(func=cmd_figure)
    p = sub.add_parser("validate", help="closed forms vs the Fock oracle")
    p.add_argument("--grid", choices=("small", "full"), default="full")
    p.add_argument("--out", required=True, help="directory for validation.csv and typos.csv")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigParseError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ComputeError as exc:
        print(f"compute error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except ValueError as exc:  # e.g. a malformed POSTSEL_DIM
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
