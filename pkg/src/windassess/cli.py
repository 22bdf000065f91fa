"""Command-line interface: ``windassess <subcommand> ...``.

Exit codes: 0 success, 1 usage, 2 data/schema, 3 numerical, 4 verification failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import (
    TABLES,
    AnalysisConfig,
    analyze_many,
    render_rows,
    histogram,
    report_table,
    reproduce_paper,
)
from .errors import (
    AccuracyError,
    ConvergenceError,
    DegenerateDataError,
    DomainError,
    InsufficientDataError,
    SchemaError,
    UsageError,
    WindAssessError,
)
from .estimation import fit_mle, validate_fit
from .observations import ingest_all, write_observations
from .powercurve import load_curve_csv, standard_curve
from .stations import StationMeta, load_registry
from .svg import histogram_svg, rose_svg
from .weibull import WeibullModel
from .windrose import bin_directions, dominant_directions, rose_csv, rose_plot_data

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NUMERICAL, EXIT_VERIFY = 0, 1, 2, 3, 4


def _common(p):
    p.add_argument("--curve", type=Path, help="power curve CSV (speed_mps,power_kw); default: built-in 1 MWp curve")
    p.add_argument("--tau-hours", type=float, default=8760.0, help="hours per year (default 8760)")
    p.add_argument("--density", type=float, default=1.225, help="air density for WPD, kg/m^3")
    p.add_argument("--threshold", type=float, default=6.0, help="exceedance threshold, m/s")
    p.add_argument("--evaluator", choices=("tabular", "polynomial"), default="tabular")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--output", "-o", type=Path, help="write to this file instead of stdout")


def _data(p, station_required=False):
    p.add_argument("--input", "-i", type=Path, required=True, help="observation CSV")
    p.add_argument("--station", required=station_required, help="station key (default: all in file)")
    p.add_argument("--registry", type=Path, action="append", default=[], help="extra station registry TOML")
    p.add_argument("--altitude", type=float, help="altitude (m) for stations not in the registry")
    p.add_argument("--strict", action="store_true", help="reject unparsable rows instead of dropping them")


def build_parser():
    parser = argparse.ArgumentParser(prog="windassess", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="fit Weibull parameters to observations")
    _data(p)
    _common(p)
    p.add_argument("--format", choices=("csv", "text"), default="csv")

    p = sub.add_parser("report", help="full per-station tables")
    _data(p)
    _common(p)
    p.add_argument("--table", choices=(*TABLES, "all"), default="all")
    p.add_argument("--format", choices=("csv", "text"), default="csv")

    p = sub.add_parser("rose", help="36-sector direction frequencies")
    _data(p, station_required=False)
    _common(p)
    p.add_argument("--format", choices=("csv", "text", "svg"), default="csv")
    p.add_argument("--secondary-threshold", type=float, default=0.15)

    p = sub.add_parser("histogram", help="speed histogram (density-normalized)")
    _data(p)
    _common(p)
    p.add_argument("--bin-width", type=float, default=0.5)
    p.add_argument("--format", choices=("csv", "text", "svg"), default="csv")

    p = sub.add_parser("curve-check", help="polynomial vs tabulated power-curve errors")
    _common(p)
    p.add_argument("--format", choices=("csv", "text"), default="text")

    p = sub.add_parser("reproduce-paper", help="recompute the published station tables and compare")
    _common(p)
    p.add_argument("--format", choices=("csv", "text"), default="text")

    p = sub.add_parser("synth", help="write a synthetic observation CSV drawn from a Weibull model")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("-n", type=int, default=8760)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--station", default="synthetic")
    p.add_argument("--direction", type=float, default=None,
                   help="mean direction (deg) of a von Mises direction draw; omit for blank directions")
    p.add_argument("--direction-kappa", type=float, default=4.0)
    p.add_argument("--start", default="2000-01-01T00:00:00")
    p.add_argument("--output", "-o", type=Path, required=True)
    return parser


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text)


def _config(args):
    return AnalysisConfig(
        rho=args.density,
        tau_hours=args.tau_hours,
        threshold=args.threshold,
        evaluator=args.evaluator,
        bin_width=getattr(args, "bin_width", 0.5),
        secondary_threshold=getattr(args, "secondary_threshold", 0.15),
    )


def _curve(args):
    return load_curve_csv(args.curve) if args.curve else standard_curve()


def _load(args):
    groups = ingest_all(args.input, strict=args.strict)
    if args.station:
        if args.station not in groups:
            raise InsufficientDataError(f"no rows for station {args.station!r} in {args.input}")
        groups = {args.station: groups[args.station]}
    if not groups:
        raise InsufficientDataError(f"{args.input}: no observation rows")
    registry = load_registry(*args.registry)
    jobs = []
    for key, series in groups.items():
        if len(series) == 0:
            raise InsufficientDataError(f"station {key!r}: no usable rows ({series.n_dropped} dropped)")
        meta = registry.get(key)
        if meta is None:
            if args.altitude is None:
                raise UsageError(f"station {key!r} is not in the registry; pass --altitude or --registry")
            meta = StationMeta(station_key=key, name=key, altitude=args.altitude)
        elif args.altitude is not None:
            meta = dataclasses.replace(meta, altitude=args.altitude)
        jobs.append((series, meta))
    return jobs


def _cmd_fit(args):
    jobs = _load(args)
    reports = analyze_many(jobs, _curve(args), _config(args), threads=args.threads)
    header = ("station", "k", "c_mps", "distribution_mean_mps", "arithmetic_mean_mps",
              "mean_gap", "validation", "n_used", "n_dropped", "log_likelihood", "iterations")
    rows = []
    for r in reports:
        f = r.fit
        v = validate_fit(f)
        rows.append([
            r.meta.name, f"{f.model.k:.6g}", f"{f.model.c:.6g}", f"{f.distribution_mean:.6g}",
            f"{f.arithmetic_mean:.6g}", f"{v.gap:.6g}", "pass" if v.passed else "fail",
            str(f.n_used), str(f.n_dropped), f"{f.log_likelihood:.10g}", str(f.iterations),
        ])
    _emit(render_rows(header, rows, args.format), args.output)
    return EXIT_OK


def _cmd_report(args):
    jobs = _load(args)
    reports = analyze_many(jobs, _curve(args), _config(args), threads=args.threads)
    ids = list(TABLES) if args.table == "all" else [args.table]
    parts = []
    for tid in ids:
        if len(ids) > 1 and args.format == "text":
            parts.append(f"[{tid}]\n")
        parts.append(report_table(reports, tid, args.format))
        if len(ids) > 1:
            parts.append("\n")
    _emit("".join(parts), args.output)
    return EXIT_OK


def _cmd_rose(args):
    jobs = _load(args)
    if len(jobs) != 1:
        raise UsageError("rose needs a single station; pass --station")
    series, meta = jobs[0]
    rose = bin_directions(series.directions, series.speeds)
    dom = dominant_directions(rose, args.secondary_threshold)
    if args.format == "csv":
        text = rose_csv(rose)
    elif args.format == "svg":
        text = rose_svg(rose_plot_data(rose), title=f"Wind direction frequency, {meta.name}")
    else:
        lines = [f"{a:5g}  {f * 100:7.3f}%" for a, f in rose_plot_data(rose)]
        lines.append(f"observations {rose.n_observations}, calm or invalid {rose.n_calm_or_invalid}")
        lines.append(f"primary {dom.primary_sector:g} deg ({dom.compass_label}), share {dom.primary_share:.4f}")
        if dom.secondary_sector is not None:
            lines.append(f"secondary {dom.secondary_sector:g} deg, share {dom.secondary_share:.4f}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def _cmd_histogram(args):
    jobs = _load(args)
    if len(jobs) != 1:
        raise UsageError("histogram needs a single station; pass --station")
    series, meta = jobs[0]
    hist = histogram(series.speeds, args.bin_width)
    if args.format == "svg":
        model = fit_mle(series.speeds).model
        grid = np.linspace(0.0, 12.0, 241)
        text = histogram_svg(hist.edges, hist.densities, list(zip(grid, model.pdf(grid))),
                             title=f"Wind speed histogram, {meta.name}")
    elif args.format == "csv":
        text = hist.to_csv()
    else:
        text = "".join(
            f"[{lo:5.2f}, {hi:5.2f})  {n:8d}  {d:.6f}\n"
            for lo, hi, n, d in zip(hist.edges[:-1], hist.edges[1:], hist.counts, hist.densities)
        )
    _emit(text, args.output)
    return EXIT_OK


def _cmd_curve_check(args):
    curve = _curve(args)
    e = curve.fit_errors()
    if args.format == "csv":
        text = ("mad_kw,rmse_kw,max_abs_dev_kw,argmax_speed_mps\n"
                f"{e.mad:.6g},{e.rmse:.6g},{e.max_abs_dev:.6g},{e.argmax_speed:g}\n")
    else:
        text = (f"MAD  {e.mad:.4f} kW\nRMSE {e.rmse:.4f} kW\n"
                f"max |deviation| {e.max_abs_dev:.4f} kW at {e.argmax_speed:g} m/s\n")
    _emit(text, args.output)
    return EXIT_OK


def _cmd_reproduce(args):
    rep = reproduce_paper(_curve(args), _config(args), threads=args.threads)
    _emit(rep.to_csv() if args.format == "csv" else rep.to_text(), args.output)
    return EXIT_OK if rep.passed else EXIT_VERIFY


def _cmd_synth(args):
    model = WeibullModel(args.k, args.c)
    rng = np.random.default_rng(args.seed)
    speeds = model.sample(args.n, rng=rng)
    directions = None
    if args.direction is not None:
        raw = np.degrees(rng.vonmises(np.radians(args.direction), args.direction_kappa, args.n))
        directions = np.round(raw % 360.0 / 10.0) * 10.0
        directions[directions == 0] = 360.0
    start = np.datetime64(args.start, "s")
    times = start + np.arange(args.n) * np.timedelta64(3600, "s")
    write_observations(args.output, args.station, times, speeds, directions)
    return EXIT_OK


_COMMANDS = {
    "fit": _cmd_fit,
    "report": _cmd_report,
    "rose": _cmd_rose,
    "histogram": _cmd_histogram,
    "curve-check": _cmd_curve_check,
    "reproduce-paper": _cmd_reproduce,
    "synth": _cmd_synth,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"windassess: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, AccuracyError) as exc:
        print(f"windassess: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (SchemaError, InsufficientDataError, DegenerateDataError, DomainError, OSError) as exc:
        print(f"windassess: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except WindAssessError as exc:
        print(f"windassess: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
