"""Command-line front end.

Subcommands tabulate characteristic functions, densities and moments, run the
flux/phasor/Huygens/metric scenarios, and produce the validation report.
Every run is deterministic given its configuration and seed; the effective
configuration is echoed into the ``*_summary.json`` next to the table so a
run can be reproduced exactly with ``--config``.

Outputs per command: ``<cmd>.csv`` (or ``.json`` with ``--format json``),
``<cmd>_summary.json``, and a rendered ``<cmd>.png`` unless ``--no-plot``.
The default seed comes from the ``RANDGAUGE_SEED`` environment variable when
set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from pathlib import Path

import numpy as np

from . import gauge as gauge_mod
from . import huygens as huygens_mod
from . import oracle, phasors, plots
from .angles import angle_spec_string, parse_angle_spec
from .phasors import parse_amplitude_spec, parse_term_spec
from .sintrans import (
    SeriesControl,
    SinusoidalTransform,
    cf_series,
    moment_bessel,
    moment_chebyshev,
    pdf_grid,
)

SEED_ENV_VAR = "RANDGAUGE_SEED"


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV_VAR, oracle.DEFAULT_SEED))


def _fmt(x) -> str:
    return "%.17g" % float(x)


def parse_grid(text: str) -> np.ndarray:
    """Parse ``start:stop:step`` into an inclusive grid."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid spec {text!r} must be start:stop:step")
    start, stop, step = (float(p) for p in parts)
    if step <= 0 or stop < start:
        raise ValueError(f"bad grid spec {text!r}")
    return np.arange(start, stop + step / 2.0, step)


def _count(text) -> int:
    value = int(float(text))
    if value <= 0:
        raise ValueError("count must be positive")
    return value


def write_table(path: Path, header: list[str], rows: list[list], fmt: str) -> None:
    if fmt == "json":
        payload = [dict(zip(header, row)) for row in rows]
        path.write_text(json.dumps(payload, indent=2) + "\n")
        return
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    path.write_text("\n".join(lines) + "\n")


def write_summary(path: Path, summary: dict) -> None:
    path.write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")


def echo_config(args: argparse.Namespace) -> dict:
    skip = {"func", "config"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip:
            continue
        out[key] = value
    return out


def _out_path(args, name: str) -> Path:
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    return outdir / name


def _table_ext(args) -> str:
    return "json" if args.format == "json" else "csv"


# ---------------------------------------------------------------- commands


def cmd_cf(args) -> int:
    t = SinusoidalTransform(args.amplitude, args.kind, parse_angle_spec(args.dist))
    ctl = SeriesControl(max_order=args.max_order, tail_tolerance=args.tail_tolerance)
    omegas = parse_grid(args.omega)
    rows = []
    analytic = []
    mc_vals = []
    errs = []
    for w in omegas:
        m = cf_series(t, float(w), ctl)
        est = oracle.estimate_cf(t, float(w), seed=args.seed, count=args.count)
        analytic.append(m)
        mc_vals.append(est.value)
        errs.append(est.std_error)
        rows.append([float(w), m.real, m.imag, est.value.real, est.value.imag, est.std_error])
    table = _out_path(args, f"cf.{_table_ext(args)}")
    write_table(table, ["omega", "re_m", "im_m", "mc_re", "mc_im", "std_err"], rows, args.format)
    write_summary(_out_path(args, "cf_summary.json"), {"config": echo_config(args)})
    if not args.no_plot:
        plots.render_cf_figure(_out_path(args, "cf.png"), omegas, analytic, mc_vals, errs)
    return 0


def cmd_pdf(args) -> int:
    t = SinusoidalTransform(args.amplitude, args.kind, parse_angle_spec(args.dist))
    ctl = SeriesControl(max_order=args.max_order, tail_tolerance=args.tail_tolerance)
    if args.y is not None:
        ys = parse_grid(args.y)
    else:
        ys = np.linspace(-args.amplitude, args.amplitude, 201)
    dens = pdf_grid(t, ys, ctl)
    rows = [[float(y), float(f)] for y, f in zip(ys, dens)]
    write_table(_out_path(args, f"pdf.{_table_ext(args)}"), ["y", "f"], rows, args.format)
    write_summary(_out_path(args, "pdf_summary.json"), {"config": echo_config(args)})
    if not args.no_plot:
        plots.render_pdf_figure(_out_path(args, "pdf.png"), ys, dens)
    return 0


def cmd_moments(args) -> int:
    t = SinusoidalTransform(args.amplitude, args.kind, parse_angle_spec(args.dist))
    ctl = SeriesControl(max_order=args.max_order, tail_tolerance=args.tail_tolerance)
    ms = list(range(1, args.max_m + 1))
    rows = []
    bessel, cheb, mc_vals, errs = [], [], [], []
    for m in ms:
        mb = moment_bessel(t, m)
        mchb = moment_chebyshev(t, m, ctl)
        est = oracle.estimate_moment(t, m, seed=args.seed, count=args.count)
        bessel.append(mb)
        cheb.append(mchb)
        mc_vals.append(est.value)
        errs.append(est.std_error)
        rows.append([m, mb, mchb, est.value, est.std_error])
    write_table(
        _out_path(args, f"moments.{_table_ext(args)}"),
        ["m", "bessel", "chebyshev", "mc", "std_err"],
        rows,
        args.format,
    )
    write_summary(_out_path(args, "moments_summary.json"), {"config": echo_config(args)})
    if not args.no_plot:
        plots.render_moments_figure(_out_path(args, "moments.png"), ms, bessel, cheb, mc_vals, errs)
    return 0


def cmd_ab(args) -> int:
    noise = parse_angle_spec(args.noise)
    p = gauge_mod.FluxPhenomenon(args.coupling, args.flux, noise)
    vis = gauge_mod.fringe_visibility(noise, seed=args.seed, count=args.count, grid_size=args.grid)
    sv = gauge_mod.random_shift_variance(p)
    mean = gauge_mod.random_shift_mean(p)

    # fringe curve from the same draw stream used for the visibility estimate
    from ._rng import philox_stream

    theta = noise.sample_with(philox_stream(args.seed), args.count)
    zbar = complex(np.mean(np.exp(1j * theta)))
    phis = np.linspace(0.0, 2.0 * np.pi, args.grid, endpoint=False)
    intensity = (1.0 + np.real(zbar * np.exp(1j * phis))) / 2.0
    rows = [[float(f), float(i)] for f, i in zip(phis, intensity)]
    write_table(_out_path(args, f"ab.{_table_ext(args)}"), ["phi", "intensity"], rows, args.format)
    summary = {
        "config": echo_config(args),
        "phase_difference": gauge_mod.phase_difference(p),
        "shift_mean": {"re": mean.real, "im": mean.imag},
        "shift_variance_paper": {"re": sv.paper_form.real, "im": sv.paper_form.imag},
        "shift_variance_exact": {"re": sv.exact_form.real, "im": sv.exact_form.imag},
        "visibility": {
            "analytic": vis.analytic,
            "empirical": vis.empirical,
            "std_error": vis.std_error,
        },
    }
    write_summary(_out_path(args, "ab_summary.json"), summary)
    if not args.no_plot:
        plots.render_fringe_figure(_out_path(args, "ab.png"), phis, intensity, vis.empirical)
    return 0


def cmd_phasor(args) -> int:
    if not args.term:
        raise ValueError("at least one --term is required")
    terms = tuple(parse_term_spec(t) for t in args.term)
    s = phasors.PhasorSum(terms)
    draws = phasors.sample_sum(s, seed=args.seed, count=args.count)
    mean = phasors.sum_mean(s)
    vp = phasors.sum_variance_paper(s)
    ve = phasors.sum_variance_exact(s)
    emp_mean = complex(np.mean(draws))
    emp_var = complex(np.var(draws.real), np.var(draws.imag))
    rows = [
        ["mean_analytic", mean.real, mean.imag],
        ["mean_mc", emp_mean.real, emp_mean.imag],
        ["variance_paper", vp.real, vp.imag],
        ["variance_exact", ve.real, ve.imag],
        ["variance_mc", emp_var.real, emp_var.imag],
    ]
    write_table(_out_path(args, f"phasor.{_table_ext(args)}"), ["quantity", "re", "im"], rows, args.format)
    write_summary(
        _out_path(args, "phasor_summary.json"),
        {"config": echo_config(args), "terms": len(terms)},
    )
    if not args.no_plot:
        plots.render_phasor_figure(_out_path(args, "phasor.png"), draws)
    return 0


def _load_gain(args) -> huygens_mod.GainPattern:
    if args.gain_config:
        spec = json.loads(Path(args.gain_config).read_text())
        coeffs = np.asarray(spec.get("coefficients", [[0.0]]), dtype=float)
        laws = None
        if "laws" in spec:
            laws = tuple(tuple(parse_amplitude_spec(s) for s in row) for row in spec["laws"])
        elif "law" in spec:
            law = parse_amplitude_spec(spec["law"])
            laws = tuple(tuple(law for _ in row) for row in coeffs)
        return huygens_mod.GainPattern(
            coefficients=coeffs,
            constant_offset=float(spec.get("constant_offset", 0.0)),
            coefficient_laws=laws,
        )
    name, _, value = args.gain.partition(":")
    if name.strip().lower() != "const":
        raise ValueError(f"unknown gain spec {args.gain!r} (use const:VALUE or --gain-config)")
    return huygens_mod.GainPattern.constant(float(value or 0.5))


def _load_wavefront(args) -> huygens_mod.Wavefront:
    name, _, value = args.wavefront.partition(":")
    if name.strip().lower() == "ones":
        return huygens_mod.Wavefront.uniform(int(value or 256))
    data = np.loadtxt(args.wavefront, delimiter=",", skiprows=1)
    return huygens_mod.Wavefront(grid=data[:, 0], amplitudes=data[:, 1] + 1j * data[:, 2])


def cmd_huygens(args) -> int:
    g = _load_gain(args)
    w = _load_wavefront(args)
    out = huygens_mod.propagate(w, g, args.t2)
    rows = [
        [float(a), float(b.real), float(b.imag), float(c.real), float(c.imag)]
        for a, b, c in zip(w.grid, w.amplitudes, out.amplitudes)
    ]
    write_table(
        _out_path(args, f"huygens.{_table_ext(args)}"),
        ["angle", "re_in", "im_in", "re_out", "im_out"],
        rows,
        args.format,
    )
    summary = {"config": echo_config(args)}
    if args.draws:
        stats = huygens_mod.ensemble_propagate(w, g, args.t2, seed=args.seed, draws=args.draws)
        erows = [
            [float(a), float(m), float(v)]
            for a, m, v in zip(w.grid, stats.mean_intensity, stats.variance)
        ]
        write_table(
            _out_path(args, f"huygens_ensemble.{_table_ext(args)}"),
            ["angle", "mean_intensity", "variance"],
            erows,
            args.format,
        )
        summary["ensemble_draws"] = stats.draws
    write_summary(_out_path(args, "huygens_summary.json"), summary)
    if not args.no_plot:
        plots.render_wavefront_figure(
            _out_path(args, "huygens.png"), w.grid, w.amplitudes, out.amplitudes
        )
    return 0


def cmd_metric(args) -> int:
    deviation = gauge_mod.metric_invariance(args.r, seed=args.seed, count=args.count)
    summary = {"config": echo_config(args), "max_deviation": deviation}
    rows = [["max_deviation", deviation, 0.0]]
    if args.noise:
        stats = gauge_mod.metric_phase(
            args.s, parse_angle_spec(args.noise), seed=args.seed, count=args.count
        )
        summary["metric_phase"] = {
            "mean_analytic": {"re": stats.mean_analytic.real, "im": stats.mean_analytic.imag},
            "mean_empirical": {"re": stats.mean_empirical.real, "im": stats.mean_empirical.imag},
            "variance_analytic": {
                "re": stats.variance_analytic.real,
                "im": stats.variance_analytic.imag,
            },
            "variance_empirical": {
                "re": stats.variance_empirical.real,
                "im": stats.variance_empirical.imag,
            },
        }
        rows.append(["phase_mean_analytic", stats.mean_analytic.real, stats.mean_analytic.imag])
        rows.append(["phase_mean_empirical", stats.mean_empirical.real, stats.mean_empirical.imag])
    write_table(_out_path(args, f"metric.{_table_ext(args)}"), ["quantity", "re", "im"], rows, args.format)
    write_summary(_out_path(args, "metric_summary.json"), summary)
    return 0


def load_golden(path: str | None = None) -> dict[str, str]:
    if path:
        return json.loads(Path(path).read_text())
    return json.loads(resources.files("randgauge.data").joinpath("golden.json").read_text())


def cmd_validate(args) -> int:
    golden = load_golden(args.golden)
    report = oracle.build_report(
        selection=args.only, seed=args.seed, count=args.count, threads=args.threads
    )
    _out_path(args, "report.csv").write_text("\n".join(oracle.report_csv_lines(report)) + "\n")
    _out_path(args, "report.txt").write_text(oracle.report_text(report))
    mismatches = {}
    for row in report.rows:
        expected = golden.get(row.quantity)
        if expected != row.verdict:
            mismatches[row.quantity] = {"expected": expected, "got": row.verdict}
    write_summary(
        _out_path(args, "report_summary.json"),
        {
            "config": echo_config(args),
            "rows": len(report.rows),
            "verdicts": report.verdicts(),
            "mismatches": mismatches,
        },
    )
    if not args.no_plot:
        quantities, psig, asig, verdicts = [], [], [], []
        for row in report.rows:
            se = row.mc.std_error + 1e-300
            quantities.append(row.quantity)
            psig.append(
                0.0
                if row.paper_value is None
                else abs(complex(row.paper_value) - complex(row.mc.value)) / se
            )
            asig.append(abs(complex(row.analytic_value) - complex(row.mc.value)) / se)
            verdicts.append(row.verdict)
        plots.render_report_figure(_out_path(args, "report.png"), quantities, psig, asig, verdicts)
    if mismatches:
        for quantity, info in mismatches.items():
            print(
                f"verdict mismatch for {quantity}: expected {info['expected']}, got {info['got']}",
                file=sys.stderr,
            )
        return 1
    return 0


# ---------------------------------------------------------------- parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=default_seed(), help="RNG seed (env RANDGAUGE_SEED)")
    p.add_argument("--output", default=".", help="output directory")
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="table format")
    p.add_argument("--no-plot", action="store_true", help="skip figure rendering")
    p.add_argument("--config", default=None, help="JSON config file overriding flags")


def _add_transform(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dist", required=True, help="distribution spec, e.g. gaussian:sigma=1")
    p.add_argument("--kind", choices=("sin", "cos"), default="sin")
    p.add_argument("-A", "--amplitude", type=float, default=1.0)
    p.add_argument("--max-order", type=int, default=64)
    p.add_argument("--tail-tolerance", type=float, default=1e-12)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="randgauge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", help="tabulate the characteristic function over an omega grid")
    _add_common(p)
    _add_transform(p)
    p.add_argument("--omega", default="0:10:0.5", help="omega grid start:stop:step")
    p.add_argument("--count", type=_count, default=100_000, help="MC draws per omega")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("pdf", help="tabulate the transformed-variable density")
    _add_common(p)
    _add_transform(p)
    p.add_argument("--y", default=None, help="y grid start:stop:step (default: 201 pts on [-A, A])")
    p.set_defaults(func=cmd_pdf)

    p = sub.add_parser("moments", help="tabulate moments by both analytic routes plus MC")
    _add_common(p)
    _add_transform(p)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--count", type=_count, default=1_000_000)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("ab", help="flux-effect phase statistics and fringe visibility")
    _add_common(p)
    p.add_argument("--noise", required=True, help="noise distribution spec")
    p.add_argument("--coupling", type=float, default=1.0)
    p.add_argument("--flux", type=float, default=1.0)
    p.add_argument("--count", type=_count, default=1_000_000)
    p.add_argument("--grid", type=int, default=256, help="phase grid points (>= 64)")
    p.set_defaults(func=cmd_ab)

    p = sub.add_parser("phasor", help="random phasor-sum statistics")
    _add_common(p)
    p.add_argument(
        "--term",
        action="append",
        default=[],
        help="phasor term AMP@ANGLE, e.g. gaussian:std=1@uniform (repeatable)",
    )
    p.add_argument("--count", type=_count, default=1_000_000)
    p.set_defaults(func=cmd_phasor)

    p = sub.add_parser("huygens", help="propagate a wavefront through a gain kernel")
    _add_common(p)
    p.add_argument("--gain", default="const:0.5", help="gain spec const:VALUE")
    p.add_argument("--gain-config", default=None, help="JSON gain pattern file")
    p.add_argument("--wavefront", default="ones:256", help="ones:N or CSV path (angle,re,im)")
    p.add_argument("--t2", type=float, default=1.0)
    p.add_argument("--draws", type=int, default=0, help="ensemble draws (0 = deterministic only)")
    p.set_defaults(func=cmd_huygens)

    p = sub.add_parser("metric", help="metric invariance and random metric phase")
    _add_common(p)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--s", type=float, default=1.0, help="metric distance for the phase statistics")
    p.add_argument("--count", type=_count, default=100_000)
    p.add_argument("--noise", default=None, help="optional metric-phase noise spec")
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser("validate", help="run the oracle suite against the golden verdicts")
    _add_common(p)
    p.add_argument("--count", type=_count, default=1_000_000)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--only", default=None, help="restrict to quantity ids with this prefix")
    p.add_argument("--golden", default=None, help="alternative golden verdict file")
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        try:
            overrides = json.loads(Path(args.config).read_text())
        except OSError as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return 1
        for key, value in overrides.items():
            setattr(args, key, value)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
