"""Command line front end.

Sub-commands map onto the library one to one: ``returns`` and ``ghe`` for
single-shot transforms, ``rolling`` and ``multifractal`` for trajectory
pipelines, ``tails`` for power-law tail fits with optional bootstrap and
date-range exclusion, ``compare-ha`` for the per-window comparison of the
measured exponent against the one implied by the tail index, and
``generate`` for synthetic oracle series in the same CSV schema the tool
ingests.

Numbers are serialized with 12 significant digits, all randomness flows
from one seed (``--seed``, else the HURSTLAB_SEED variable, else 0), and
identical invocations produce byte-identical outputs. Errors print a
one-line JSON record on stderr and exit with 2 (bad input or parameters),
3 (not enough data), 4 (degenerate series) or 5 (numeric failure).
"""

from __future__ import annotations

import argparse
import csv
import datetime
import io
import json
import os
import sys
from dataclasses import replace

import numpy as np

from .core import (
    LogPriceSeries,
    PriceSeries,
    exp_weights,
    log_prices,
    log_returns,
)
from .errors import (
    HurstlabError,
    InsufficientDataError,
    InvalidParameterError,
    NumericError,
    ParseError,
    RejectedInputError,
)
from .ghe import estimate_ghe
from .rolling import GheTrajectory, RollingConfig, rolling_ghe
from .synth import GeneratorSpec, derived_seed, generate
from .tails import fit_tail, split_period_fit, tail_pvalue, theoretical_hurst

EPILOG = """\
defaults suit daily price series: 750-day windows (about three trading
years), 50-day shifts, exponential weights with a 250-day characteristic
time (one trading year), moment orders 1 and 1.5, and tau_max averaged
over 5..19.

exit codes: 0 ok, 2 input or parameter error, 3 insufficient data,
4 degenerate series, 5 internal numeric failure.

seed resolution: --seed, else the HURSTLAB_SEED environment variable,
else 0. identical inputs, flags and seeds give byte-identical outputs.
"""


# ---------------------------------------------------------------- ingestion

def ingest_csv(path: str) -> PriceSeries:
    """Read a `date,close` CSV (ISO dates) into a PriceSeries.

    Rows are sorted by date after parsing, so a shuffled file yields the
    same series as a sorted one. Duplicate dates, non-positive and
    non-finite prices are rejected with their line number.
    """
    if path == "-":
        text = sys.stdin.read()
        stream = io.StringIO(text)
    else:
        try:
            stream = open(path, "r", newline="", encoding="utf-8-sig")
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from exc
    with stream:
        reader = csv.reader(stream)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(f"{path}: empty file") from None
        if [c.strip().lower() for c in header] != ["date", "close"]:
            raise ParseError(
                f"{path}: line 1: expected header 'date,close', got {','.join(header)!r}"
            )
        dates, prices = [], []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise ParseError(f"{path}: line {lineno}: expected 2 fields, got {len(row)}")
            raw_date, raw_price = row[0].strip(), row[1].strip()
            try:
                day = datetime.date.fromisoformat(raw_date)
            except ValueError:
                raise ParseError(
                    f"{path}: line {lineno}: invalid ISO date {raw_date!r}"
                ) from None
            try:
                price = float(raw_price)
            except ValueError:
                raise ParseError(
                    f"{path}: line {lineno}: invalid price {raw_price!r}"
                ) from None
            if not np.isfinite(price) or price <= 0:
                raise RejectedInputError(
                    f"{path}: line {lineno}: non-positive price {raw_price}"
                )
            dates.append(np.datetime64(day, "D"))
            prices.append(price)
    if len(dates) < 2:
        raise InsufficientDataError(f"{path}: need at least 2 data rows, got {len(dates)}")
    ts = np.array(dates, dtype="datetime64[D]")
    order = np.argsort(ts, kind="stable")
    ts = ts[order]
    px = np.array(prices)[order]
    dup = np.flatnonzero(np.diff(ts).astype(int) == 0)
    if dup.size:
        raise RejectedInputError(f"{path}: duplicate date {ts[dup[0] + 1]}")
    return PriceSeries(timestamps=ts, prices=px)


# ------------------------------------------------------------- serialization

def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, np.datetime64):
        return str(value)
    if isinstance(value, (bool, np.bool_)):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.12g}"
    return str(value)


def _json_value(value):
    if value is None or isinstance(value, str):
        return value
    if isinstance(value, np.datetime64):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(f"{float(value):.12g}")
    return value


def _write_table(args, header, rows) -> None:
    if args.output:
        out = open(args.output, "w", newline="", encoding="utf-8")
    else:
        out = sys.stdout
    try:
        if args.format == "json":
            records = [
                {key: _json_value(val) for key, val in zip(header, row)} for row in rows
            ]
            out.write(json.dumps(records, indent=2))
            out.write("\n")
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([_fmt(v) for v in row])
    finally:
        if args.output:
            out.close()


def emit_prices(series: PriceSeries, stream) -> None:
    """Write a PriceSeries back out in the ingestion schema."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["date", "close"])
    for day, price in zip(series.timestamps, series.prices):
        writer.writerow([str(day), f"{price:.12g}"])


def _plot_stem(args) -> str:
    if not args.output:
        raise InvalidParameterError("--plot needs --output to name the plot files")
    stem, _, _ = args.output.rpartition(".")
    return stem or args.output


def _write_curve(path: str, xs, ys) -> None:
    with open(path, "w", encoding="utf-8") as out:
        for x, y in zip(xs, ys):
            out.write(f"{_fmt(x)} {_fmt(y)}\n")


# ------------------------------------------------------------------ helpers

def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return int(args.seed)
    env = os.environ.get("HURSTLAB_SEED")
    if env is not None and env != "":
        try:
            return int(env)
        except ValueError:
            raise InvalidParameterError(
                f"HURSTLAB_SEED must be an integer, got {env!r}"
            ) from None
    return 0


def _tau_range(args) -> range:
    if args.tau_max_lo < 3:
        raise InvalidParameterError("--tau-max-lo must be at least 3")
    if args.tau_max_hi < args.tau_max_lo:
        raise InvalidParameterError("--tau-max-hi must be >= --tau-max-lo")
    return range(args.tau_max_lo, args.tau_max_hi + 1)


def _load_series(args) -> LogPriceSeries:
    prices = ingest_csv(args.input)
    if getattr(args, "series", "log") == "raw":
        # raw-price mode: analyze the price path itself instead of its log
        return LogPriceSeries(values=prices.prices, timestamps=prices.timestamps)
    return log_prices(prices)


def _rolling_config(args, q_list) -> RollingConfig:
    return RollingConfig(
        window=args.window,
        shift=args.shift,
        theta=args.theta,
        q_list=q_list,
        tau_max_range=tuple(_tau_range(args)),
        weighted=args.weighted,
        anchor=args.anchor,
    )


def _window_starts(n: int, cfg: RollingConfig, count: int):
    offset = (n - cfg.window) % cfg.shift if cfg.anchor == "end" else 0
    return [offset + i * cfg.shift for i in range(count)]


def _qtag(q: float) -> str:
    return f"{q:g}"


# ----------------------------------------------------------------- commands

def _cmd_returns(args) -> None:
    rets = log_returns(ingest_csv(args.input))
    rows = [(day, float(v)) for day, v in zip(rets.timestamps, rets.values)]
    _write_table(args, ["date", "log_return"], rows)
    if args.plot:
        stem = _plot_stem(args)
        _write_curve(f"{stem}_returns.dat", rets.timestamps, rets.values)
        from .figures import render_svg

        render_svg(
            f"{stem}.svg",
            [("log return", rets.timestamps, rets.values)],
            xlabel="date",
            ylabel="log return",
        )


def _cmd_ghe(args) -> None:
    if args.plot:
        raise InvalidParameterError("ghe produces a single estimate, nothing to plot")
    series = _load_series(args)
    weights = exp_weights(len(series), args.theta) if args.weighted else None
    est = estimate_ghe(series, args.q, _tau_range(args), weights=weights)
    _write_table(args, ["q", "h", "sigma"], [(est.q, est.h, est.sigma)])


def _traj_rows(traj: GheTrajectory):
    for i, day in enumerate(traj.window_end_dates):
        for q in traj.config.q_list:
            est = traj.estimates[q][i]
            if est is None:
                yield (day, q, None, None)
            else:
                yield (day, q, est.h, est.sigma)


def _cmd_rolling(args) -> None:
    series = _load_series(args)
    q_list = tuple(args.q) if args.q else (1.0, 1.5)
    traj = rolling_ghe(series, _rolling_config(args, q_list))
    _write_table(args, ["window_end_date", "q", "h", "sigma"], list(_traj_rows(traj)))
    if args.plot:
        stem = _plot_stem(args)
        curves, bands = [], []
        for q in q_list:
            ests = traj.estimates[q]
            keep = [i for i, e in enumerate(ests) if e is not None]
            xs = traj.window_end_dates[keep]
            hs = np.array([ests[i].h for i in keep])
            sg = np.array([ests[i].sigma for i in keep])
            _write_curve(f"{stem}_h_q{_qtag(q)}.dat", xs, hs)
            _write_curve(f"{stem}_sigma_q{_qtag(q)}.dat", xs, sg)
            curves.append((f"H(q={_qtag(q)})", xs, hs))
            bands.append((xs, hs - sg, hs + sg))
        from .figures import render_svg

        render_svg(
            f"{stem}.svg",
            curves,
            bands=bands,
            xlabel="window end",
            ylabel="H(q)",
            title="rolling generalized Hurst exponent",
        )


def _tail_values(args, rets) -> np.ndarray:
    if args.tail == "pos":
        return np.asarray(rets.values, dtype=float)
    if args.tail == "neg":
        return -np.asarray(rets.values, dtype=float)
    return np.abs(rets.values)


def _cmd_tails(args) -> None:
    if args.xmin is not None and args.xmin_scan:
        raise InvalidParameterError("--xmin and --xmin-scan are mutually exclusive")
    if (args.exclude_from is None) != (args.exclude_to is None):
        raise InvalidParameterError("--exclude-from and --exclude-to go together")
    rets = log_returns(ingest_csv(args.input))
    seed = _resolve_seed(args)
    header = ["alpha", "x_min", "n_tail", "ks", "p_value"]

    if args.exclude_from is not None:
        pair = split_period_fit(
            rets, args.exclude_from, args.exclude_to,
            x_min=args.xmin, min_tail=args.min_tail,
        )
        mags = np.abs(rets.values)
        lo = np.datetime64(args.exclude_from, "D")
        hi = np.datetime64(args.exclude_to, "D")
        kept = mags[~((rets.timestamps >= lo) & (rets.timestamps <= hi))]
        rows = []
        for name, fit, sample in (("full", pair.full, mags), ("excluded", pair.excluded, kept)):
            p = None
            if args.pvalue_replicates > 0:
                p = tail_pvalue(sample, fit, args.pvalue_replicates, seed)
            rows.append((fit.alpha, fit.x_min, fit.n_tail, fit.ks_statistic, p, name))
        _write_table(args, header + ["sample"], rows)
        return

    values = _tail_values(args, rets)
    fit = fit_tail(values, x_min=args.xmin, min_tail=args.min_tail)
    if args.pvalue_replicates > 0:
        p = tail_pvalue(values, fit, args.pvalue_replicates, seed)
        fit = replace(fit, p_value=p, boot_replicates=args.pvalue_replicates)
    _write_table(
        args, header,
        [(fit.alpha, fit.x_min, fit.n_tail, fit.ks_statistic, fit.p_value)],
    )
    if args.plot:
        stem = _plot_stem(args)
        from .tails import ccdf as build_ccdf

        curve = build_ccdf(values, absolute=False)
        keep = curve.sorted_values > 0
        _write_curve(
            f"{stem}_ccdf.dat", curve.sorted_values[keep], curve.exceedance_probs[keep]
        )
        frac = fit.n_tail / len(values)
        grid = np.geomspace(fit.x_min, float(curve.sorted_values.max()), 200)
        model = frac * (grid / fit.x_min) ** (1.0 - fit.alpha)
        _write_curve(f"{stem}_fit.dat", grid, model)
        from .figures import render_svg

        render_svg(
            f"{stem}.svg",
            [
                ("empirical tail", curve.sorted_values[keep], curve.exceedance_probs[keep]),
                (f"alpha={fit.alpha:.3g} above x_min={fit.x_min:.3g}", grid, model),
            ],
            kind="scatter",
            logx=True,
            logy=True,
            xlabel="|log return|",
            ylabel="exceedance probability",
        )


def _cmd_multifractal(args) -> None:
    if float(args.q) == float(args.q2):
        raise InvalidParameterError("--q and --q2 must differ")
    series = _load_series(args)
    traj = rolling_ghe(series, _rolling_config(args, (args.q, args.q2)))
    widths = traj.widths[(float(args.q), float(args.q2))]
    rows = [
        (day, float(args.q), float(args.q2), w)
        for day, w in zip(traj.window_end_dates, widths)
    ]
    _write_table(args, ["window_end_date", "q1", "q2", "width"], rows)
    if args.plot:
        stem = _plot_stem(args)
        keep = [i for i, w in enumerate(widths) if w is not None]
        xs = traj.window_end_dates[keep]
        ws = np.array([widths[i] for i in keep])
        _write_curve(f"{stem}_width.dat", xs, ws)
        from .figures import render_svg

        render_svg(
            f"{stem}.svg",
            [(f"H({_qtag(args.q)}) - H({_qtag(args.q2)})", xs, ws)],
            xlabel="window end",
            ylabel="multifractality width",
        )


def _cmd_compare_ha(args) -> None:
    series = _load_series(args)
    cfg = _rolling_config(args, (args.q,))
    traj = rolling_ghe(series, cfg)
    starts = _window_starts(len(series), cfg, len(traj.window_end_dates))
    x = series.values
    rows = []
    scatter_x, scatter_y = [], []
    for i, day in enumerate(traj.window_end_dates):
        est = traj.estimates[float(args.q)][i]
        rets = np.abs(np.diff(x[starts[i]:starts[i] + cfg.window]))
        try:
            fit = fit_tail(rets, x_min=args.xmin, min_tail=args.min_tail)
            # the scaling relation is stated for the survival-function
            # exponent, one below the density exponent the fit reports
            alpha = fit.alpha - 1.0
        except HurstlabError:
            alpha = None
        if est is None:
            rows.append((day, None, None, alpha))
        else:
            rows.append((day, est.h, est.sigma, alpha))
            if alpha is not None:
                scatter_x.append(theoretical_hurst(alpha))
                scatter_y.append(est.h)
    _write_table(args, ["window_end_date", "h_q1", "sigma", "alpha"], rows)
    if args.plot:
        stem = _plot_stem(args)
        _write_curve(f"{stem}_ha.dat", scatter_x, scatter_y)
        from .figures import render_svg

        render_svg(
            f"{stem}.svg",
            [("windows", scatter_x, scatter_y)],
            kind="scatter",
            diagonal=True,
            xlabel="H implied by tail exponent",
            ylabel="measured H(q)",
        )


def _segment_spec(hurst, alpha, length, seed) -> GeneratorSpec:
    if hurst is not None:
        return GeneratorSpec(kind="fbm", length=length, seed=seed, hurst=hurst)
    if alpha is not None:
        return GeneratorSpec(kind="levy_walk", length=length, seed=seed, alpha=alpha)
    return GeneratorSpec(kind="gaussian_walk", length=length, seed=seed)


def _cmd_generate(args) -> None:
    seed = _resolve_seed(args)
    if args.kind == "regime_splice":
        if not args.splice_at or not 0 < args.splice_at < args.n:
            raise InvalidParameterError("--splice-at must lie strictly inside 1..n-1")
        first = _segment_spec(args.hurst, args.alpha, args.splice_at, derived_seed(seed, 0))
        second = _segment_spec(
            args.hurst2, args.alpha2, args.n - args.splice_at, derived_seed(seed, 1)
        )
        spec = GeneratorSpec(
            kind="regime_splice", length=args.n, seed=seed, segments=(first, second)
        )
    else:
        spec = GeneratorSpec(
            kind=args.kind, length=args.n, seed=seed, hurst=args.hurst, alpha=args.alpha
        )
    series = generate(spec)
    try:
        start = datetime.date.fromisoformat(args.start_date)
    except ValueError:
        raise InvalidParameterError(
            f"--start-date must be an ISO date, got {args.start_date!r}"
        ) from None
    days = np.datetime64(start, "D") + np.arange(len(series))
    prices = np.exp(args.price_scale * series.values)
    if not np.all(np.isfinite(prices)) or np.any(prices <= 0):
        raise NumericError(
            "generated log-prices overflow the price range; lower --price-scale"
        )
    rows = [(day, float(p)) for day, p in zip(days, prices)]
    _write_table(args, ["date", "close"], rows)
    if args.plot:
        stem = _plot_stem(args)
        _write_curve(f"{stem}_series.dat", days, prices)
        from .figures import render_svg

        render_svg(
            f"{stem}.svg",
            [(args.kind, days, prices)],
            xlabel="date",
            ylabel="close",
        )


# ------------------------------------------------------------------- parser

def _add_io(p: argparse.ArgumentParser, needs_input=True) -> None:
    if needs_input:
        p.add_argument("-i", "--input", required=True,
                       help="input CSV with header date,close ('-' for stdin)")
    p.add_argument("-o", "--output", default=None,
                   help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="output format (default csv)")
    p.add_argument("--plot", action="store_true",
                   help="also write two-column .dat files per curve and a "
                        "self-contained SVG next to --output")
    p.add_argument("--seed", type=int, default=None,
                   help="RNG seed; falls back to HURSTLAB_SEED, then 0")


def _add_weighting(p: argparse.ArgumentParser, default_weighted: bool) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--weighted", dest="weighted", action="store_true",
                       help="exponentially weighted averages"
                            + (" (default)" if default_weighted else ""))
    group.add_argument("--unweighted", dest="weighted", action="store_false",
                       help="plain averages"
                            + ("" if default_weighted else " (default)"))
    p.set_defaults(weighted=default_weighted)
    p.add_argument("--theta", type=float, default=250.0,
                   help="weight characteristic time in days (default 250, "
                        "one trading year)")


def _add_tau(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tau-max-lo", type=int, default=5,
                   help="smallest tau_max in the averaging range (default 5)")
    p.add_argument("--tau-max-hi", type=int, default=19,
                   help="largest tau_max in the averaging range (default 19)")


def _add_window(p: argparse.ArgumentParser) -> None:
    p.add_argument("--window", type=int, default=750,
                   help="rolling window length in days (default 750, about "
                        "three trading years)")
    p.add_argument("--shift", type=int, default=50,
                   help="days between successive windows (default 50)")
    p.add_argument("--anchor", choices=("end", "start"), default="end",
                   help="align the last window to the last observation (end, "
                        "default) or the first window to the first (start)")


def _add_series_mode(p: argparse.ArgumentParser) -> None:
    p.add_argument("--series", choices=("log", "raw"), default="log",
                   help="analyze log-prices (default) or raw prices")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurstlab",
        description="Rolling weighted Hurst exponents and power-law return "
                    "tails for daily price series.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("returns", help="daily log-returns of a price file")
    _add_io(p)

    p = sub.add_parser("ghe", help="H(q) on the whole series as one window")
    _add_io(p)
    p.add_argument("--q", type=float, default=1.0, help="moment order (default 1)")
    _add_tau(p)
    _add_weighting(p, default_weighted=False)
    _add_series_mode(p)

    p = sub.add_parser("rolling", help="H(q) trajectory over moving windows")
    _add_io(p)
    p.add_argument("--q", type=float, action="append", default=None,
                   help="moment order, repeatable (default: 1 and 1.5)")
    _add_window(p)
    _add_tau(p)
    _add_weighting(p, default_weighted=True)
    _add_series_mode(p)

    p = sub.add_parser("tails", help="power-law fit of the return tail")
    _add_io(p)
    p.add_argument("--xmin", type=float, default=None,
                   help="fixed lower cutoff (default: scan for it)")
    p.add_argument("--xmin-scan", action="store_true",
                   help="choose x_min by KS scan (the default strategy)")
    p.add_argument("--min-tail", type=int, default=50,
                   help="smallest tail a scan candidate may keep (default 50)")
    p.add_argument("--tail", choices=("abs", "pos", "neg"), default="abs",
                   help="fit |r| (default), the positive tail, or the "
                        "negative tail")
    p.add_argument("--pvalue-replicates", type=int, default=1000,
                   help="bootstrap replicates for the p-value; 0 skips it "
                        "(default 1000, resolution about 0.03)")
    p.add_argument("--exclude-from", default=None, metavar="DATE",
                   help="start of a date range to exclude in a second fit")
    p.add_argument("--exclude-to", default=None, metavar="DATE",
                   help="end of the excluded date range (inclusive)")

    p = sub.add_parser("multifractal", help="H(q1) - H(q2) width per window")
    _add_io(p)
    p.add_argument("--q", type=float, default=1.0, help="first moment order (default 1)")
    p.add_argument("--q2", type=float, default=1.5, help="second moment order (default 1.5)")
    _add_window(p)
    _add_tau(p)
    _add_weighting(p, default_weighted=True)
    _add_series_mode(p)

    p = sub.add_parser("compare-ha",
                       help="measured H per window next to the tail-implied one")
    _add_io(p)
    p.add_argument("--q", type=float, default=1.0, help="moment order (default 1)")
    p.add_argument("--xmin", type=float, default=None,
                   help="fixed tail cutoff per window (default: scan)")
    p.add_argument("--min-tail", type=int, default=50,
                   help="smallest tail a scan candidate may keep (default 50)")
    _add_window(p)
    _add_tau(p)
    _add_weighting(p, default_weighted=True)
    _add_series_mode(p)

    p = sub.add_parser("generate", help="synthetic series in the input schema")
    _add_io(p, needs_input=False)
    p.add_argument("--kind", required=True,
                   choices=("gaussian_walk", "fbm", "levy_walk", "regime_splice"))
    p.add_argument("--n", type=int, required=True, help="series length in days")
    p.add_argument("--hurst", type=float, default=None,
                   help="Hurst exponent (fbm, or first splice segment)")
    p.add_argument("--alpha", type=float, default=None,
                   help="stable index (levy_walk, or first splice segment)")
    p.add_argument("--hurst2", type=float, default=None,
                   help="Hurst exponent of the second splice segment")
    p.add_argument("--alpha2", type=float, default=None,
                   help="stable index of the second splice segment")
    p.add_argument("--splice-at", type=int, default=None,
                   help="length of the first splice segment")
    p.add_argument("--price-scale", type=float, default=0.01,
                   help="daily increment scale applied before exponentiating "
                        "to prices (default 0.01, keeps prices in range)")
    p.add_argument("--start-date", default="2000-01-01",
                   help="date of the first synthetic observation")

    return parser


_HANDLERS = {
    "returns": _cmd_returns,
    "ghe": _cmd_ghe,
    "rolling": _cmd_rolling,
    "tails": _cmd_tails,
    "multifractal": _cmd_multifractal,
    "compare-ha": _cmd_compare_ha,
    "generate": _cmd_generate,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if getattr(args, "plot", False):
            _plot_stem(args)  # fail before any work if --output is missing
        _HANDLERS[args.command](args)
    except HurstlabError as err:
        sys.stderr.write(err.record() + "\n")
        return err.exit_code
    except BrokenPipeError:
        # the reader went away (e.g. piped into head); leave quietly
        try:
            sys.stdout.close()
        except BrokenPipeError:
            pass
        return 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
