"""Command-line interface.

Subcommands: spectrum | riesz | bounds | verify | table | figure.
Global flags (valid on every subcommand): --output <path>, --format,
--full-precision.

Output is deterministic: identical invocations produce byte-identical
bytes, numbers are rendered with 6 significant figures by default and 17
digits under --full-precision, and files are written atomically.  Only the
``verify`` subcommand encodes mathematical content in its exit code.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

from . import bounds, riesz, spectra, specfun, verify
from .errors import RieszBoundsError


def _fmt(full_precision: bool):
    digits = "{:.17g}" if full_precision else "{:.6g}"
    return lambda x: digits.format(x)


def _emit(text: str, output: str | None) -> None:
    """Write to stdout, or atomically to the output path."""
    if output is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(output))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".rieszbounds-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, output)
    except BaseException:
        os.unlink(tmp)
        raise


def _rows_to_csv(header, rows, fmt):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(
            c if isinstance(c, str) else fmt(c) for c in row))
    return "\n".join(lines) + "\n"


def _rows_to_json(header, rows, fmt):
    payload = {"columns": list(header),
               "rows": [[c if isinstance(c, str) else float(fmt(c))
                         for c in row] for row in rows]}
    return json.dumps(payload, indent=2) + "\n"


def _emit_rows(args, header, rows):
    fmt = _fmt(args.full_precision)
    if args.format == "json":
        _emit(_rows_to_json(header, rows, fmt), args.output)
    else:
        _emit(_rows_to_csv(header, rows, fmt), args.output)


# ---------------------------------------------------------------------------
# spectrum sources shared by several subcommands

def _add_domain_flags(p):
    p.add_argument("--box", nargs="+", type=float, metavar="L",
                   help="box side lengths")
    p.add_argument("--ball", action="store_true", help="ball domain")
    p.add_argument("--dim", type=int, help="ball dimension")
    p.add_argument("--radius", type=float, default=1.0, help="ball radius")
    p.add_argument("--load", metavar="PATH", help="load a spectrum file")
    p.add_argument("--lambda-max", type=float,
                   help="completeness threshold for generated spectra")


def _spectrum_from_args(args) -> spectra.Spectrum:
    chosen = sum(bool(x) for x in (args.box, args.ball, args.load))
    if chosen != 1:
        raise RieszBoundsError(
            "choose exactly one of --box, --ball, --load")
    if args.load:
        return spectra.load_spectrum(args.load)
    if args.lambda_max is None:
        raise RieszBoundsError("--lambda-max is required for generation")
    if args.box:
        return spectra.box_spectrum(args.box, args.lambda_max)
    if args.dim is None:
        raise RieszBoundsError("--ball requires --dim")
    return spectra.ball_spectrum(args.dim, args.radius, args.lambda_max)


# ---------------------------------------------------------------------------
# subcommands

def cmd_spectrum(args) -> int:
    spec = _spectrum_from_args(args)
    if args.format == "json":
        payload = {
            "dim": spec.dimension,
            "complete_below": spec.complete_below,
            "volume": spec.volume,
            "eigenvalues": [float(v) for v in spec.eigenvalues],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    elif args.format == "csv":
        _emit(spectra.spectrum_csv(spec, args.full_precision), args.output)
    else:
        lines = [f"dim: {spec.dimension}",
                 f"complete_below: {spec.complete_below!r}"]
        if spec.volume is not None:
            lines.append(f"volume: {spec.volume!r}")
        lines.extend(repr(float(v)) for v in spec.eigenvalues)
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_riesz(args) -> int:
    spec = _spectrum_from_args(args)
    if args.legendre is not None:
        rows = [[w, riesz.legendre_R1(spec, w)] for w in args.legendre]
        _emit_rows(args, ["w", "legendre_R1"], rows)
        return 0
    if args.means is not None:
        m = riesz.means(spec, args.means)
        rows = [[m.k, m.mean, m.mean_sq, m.geometric, m.harmonic]]
        _emit_rows(args, ["k", "mean", "mean_sq", "geometric", "harmonic"],
                   rows)
        return 0
    if not args.z:
        raise RieszBoundsError("riesz needs --z values (or --means/--legendre)")
    rows = []
    for z in args.z:
        ev = riesz.riesz_mean(spec, args.sigma, z)
        rows.append([args.sigma, z, ev.value, ev.contributing])
    _emit_rows(args, ["sigma", "z", "riesz_mean", "contributing"], rows)
    return 0


def cmd_bounds(args) -> int:
    if args.bessel_zeros is not None:
        orders = [float(v) for v in args.bessel_zeros.split(",")]
        rows = [[nu, p, specfun.bessel_zero(nu, p).value]
                for nu in orders for p in range(1, args.zero_count + 1)]
        _emit_rows(args, ["nu", "p", "zero"], rows)
        return 0
    if args.eval is not None:
        bound_id = args.eval
        kwargs = {}
        for item in args.arg:
            key, _, val = item.partition("=")
            kwargs[key] = float(val) if "." in val or "e" in val.lower() \
                else int(val)
        value = bounds.evaluate(bound_id, **kwargs)
        fmt = _fmt(args.full_precision)
        payload = {"id": bound_id, "args": kwargs, "value": float(fmt(value))}
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
        return 0
    # default: --list
    _emit(json.dumps(bounds.catalog_dump(), indent=2) + "\n", args.output)
    return 0


def cmd_verify(args) -> int:
    if args.spectrum:
        specs = {os.path.basename(p): spectra.load_spectrum(p)
                 for p in args.spectrum}
    else:
        specs = verify.default_spectra()
    cfg = verify.VerifyConfig(
        z_points=args.z_points, z_max=args.z_max, seed=args.seed,
        inject_corruption=args.inject_corruption)
    report = verify.run_suite(specs, cfg)
    if args.format == "json":
        _emit(json.dumps(report.to_json_dict(), indent=2) + "\n",
              args.output)
    else:
        _emit(report.to_text(), args.output)
    return 0 if report.all_passed else 1


TABLE1_COLUMNS = (
    ("eq_3_4_j1", lambda d, k: bounds.simple_p9(d, k)),
    ("cy_av", lambda d, k: bounds.cy_av(d, k)),
    ("her2", lambda d, k: bounds.her2(d, k)),
    ("ab94_avg", lambda d, k: bounds.ab94_avg(d, k)),
    ("fk_weyl_avg", lambda d, k: bounds.fk_weyl_avg(d, k)),
)


def _table2_k(d: int) -> int:
    return int(math.floor((d + 1) * (1 + d / 2) / (1 + d / 4))) + 1


def table_rows(table_id: str, d_range=range(2, 8)):
    """Row data for the three comparison tables."""
    if table_id == "table1":
        header = ["d", "k"] + [name for name, _ in TABLE1_COLUMNS]
        rows = [[str(d), "127"] + [fn(d, 127) for _, fn in TABLE1_COLUMNS]
                for d in d_range]
        return header, rows
    if table_id == "table2":
        header = ["d", "k", "abhh_over_fk_weyl_avg",
                  "cheng_yang2_avg_over_fk_weyl_avg"]
        rows = []
        for d in d_range:
            k = _table2_k(d)
            ref = bounds.fk_weyl_avg(d, k)
            rows.append([str(d), str(k), bounds.abhh(d, k) / ref,
                         bounds.cheng_yang2_avg(d, k) / ref])
        return header, rows
    if table_id == "table3":
        header = ["d", "eq_3_4_j1_over_fk_weyl_avg",
                  "cy_av_over_fk_weyl_avg"]
        rows = []
        for d in d_range:
            ref = bounds.fk_coeff(d) / (1 + 2 / d)
            rows.append([str(d), bounds.simple_p9_coeff(d) / ref,
                         bounds.cy_av_coeff(d) / ref])
        return header, rows
    raise RieszBoundsError(f"unknown table id {table_id!r}")


def figure_rows(fig_id: str, k_min=2, k_max=127, m_max=7, d_min=2, d_max=7):
    """Curve data for the three figures."""
    if fig_id == "fig1":
        header = ["d", "eq_3_4_j1_coeff", "cy_av_coeff"]
        rows = [[str(d), bounds.simple_p9_coeff(d), bounds.cy_av_coeff(d)]
                for d in range(d_min, d_max + 1)]
        return header, rows
    if fig_id == "fig2":
        d = 4
        header = ["k"] + [name for name, _ in TABLE1_COLUMNS]
        rows = [[str(k)] + [fn(d, k) for _, fn in TABLE1_COLUMNS]
                for k in range(k_min, k_max + 1)]
        return header, rows
    if fig_id == "fig3":
        d = 3
        header = ["k", "ab94", "cheng_yang"]
        rows = [[str(2 ** m), bounds.ab94(d, m),
                 bounds.cheng_yang(d, 2 ** m)]
                for m in range(0, m_max + 1)]
        return header, rows
    raise RieszBoundsError(f"unknown figure id {fig_id!r}")


def cmd_table(args) -> int:
    header, rows = table_rows(args.table_id)
    _emit_rows(args, header, rows)
    return 0


def cmd_figure(args) -> int:
    header, rows = figure_rows(args.fig_id, k_min=args.k_min,
                               k_max=args.k_max, m_max=args.m_max,
                               d_min=args.d_min, d_max=args.d_max)
    _emit_rows(args, header, rows)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", metavar="PATH",
                        help="write output to PATH (atomic) instead of stdout")
    common.add_argument("--format", choices=("csv", "json", "text"),
                        default="csv", help="output format (default csv)")
    common.add_argument("--full-precision", action="store_true",
                        help="render numbers with 17 digits instead of 6")

    ap = argparse.ArgumentParser(
        prog="rieszbounds",
        description="Riesz means and universal eigenvalue bounds for "
                    "Dirichlet Laplacian spectra")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common],
                       help="generate or convert a spectrum")
    _add_domain_flags(p)
    p.set_defaults(fn=cmd_spectrum, format="text")

    p = sub.add_parser("riesz", parents=[common],
                       help="evaluate Riesz means, averages, or the "
                            "Legendre transform")
    _add_domain_flags(p)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--z", nargs="+", type=float)
    p.add_argument("--means", type=int, metavar="K",
                   help="report eigenvalue averages at index K")
    p.add_argument("--legendre", nargs="+", type=float, metavar="W",
                   help="Legendre transform of the first-order mean at W")
    p.set_defaults(fn=cmd_riesz)

    p = sub.add_parser("bounds", parents=[common],
                       help="list or evaluate catalog bounds")
    p.add_argument("--list", action="store_true",
                   help="dump the bound catalog as JSON (default)")
    p.add_argument("--eval", metavar="ID", help="evaluate one bound")
    p.add_argument("--arg", action="append", default=[],
                   metavar="KEY=VALUE", help="bound arguments for --eval")
    p.add_argument("--bessel-zeros", metavar="NU[,NU...]",
                   help="export Bessel zeros j_{nu,p} for the given orders")
    p.add_argument("--zero-count", type=int, default=10,
                   help="zeros per order for --bessel-zeros")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("verify", parents=[common],
                       help="run the inequality verification suite")
    p.add_argument("--spectrum", action="append", metavar="PATH",
                   help="spectrum file (repeatable; default: built-in set)")
    p.add_argument("--z-points", type=int, default=200)
    p.add_argument("--z-max", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-corruption", action="store_true",
                   help="corrupt the spectra first (must make the suite fail)")
    p.set_defaults(fn=cmd_verify, format="text")

    p = sub.add_parser("table", parents=[common],
                       help="reproduce a comparison table")
    p.add_argument("table_id", choices=("table1", "table2", "table3"))
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("figure", parents=[common],
                       help="emit curve data for a figure")
    p.add_argument("fig_id", choices=("fig1", "fig2", "fig3"))
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=127)
    p.add_argument("--m-max", type=int, default=7)
    p.add_argument("--d-min", type=int, default=2)
    p.add_argument("--d-max", type=int, default=7)
    p.set_defaults(fn=cmd_figure)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except RieszBoundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
