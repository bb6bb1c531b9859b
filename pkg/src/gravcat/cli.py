"""gravcat command line: point reports, sweeps, figure CSVs and Stirling cycles.

Exit codes: 0 ok, 2 usage/domain error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from pathlib import Path

import numpy as np

from . import __version__, estimation, figures, thermo
from .errors import NumericalError
from .model import ModelParams
from .qfim import (compatibility, parse_pair, qfim_integral, qfim_spectral, qfim_vectorized,
                   sld, sld_residual)
from .sweep import (CYCLE_QUANTITIES, DEFAULT_TMIN, SweepSpec, bound_quantities, format_value,
                    run_sweep, write_rows)
from .thermal import check_temperature, gibbs_state, partition_function, x_state_elements

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL = 0, 2, 3
PAIR_CHOICES = ("gamma,temp", "omega,temp", "omega,gamma")


class UsageError(Exception):
    pass


def _float(text):
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


@contextlib.contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def _emit_record(record: dict, fmt: str, stream):
    if fmt == "text":
        width = max(len(k) for k in record)
        for k, v in record.items():
            stream.write(f"{k:<{width}} = {format_value(v)}\n")
    else:
        write_rows(stream, list(record), [list(record.values())], fmt)


# ---------------------------------------------------------------- point

def point_report(omega, gamma, temp, pair=("gamma", "temp"), precision="auto") -> dict:
    """Flat key/value report for one (omega, gamma, T) point and parameter pair."""
    params = ModelParams(omega, gamma)
    T = check_temperature(temp)
    a, b = parse_pair(pair)
    rec = {"omega": params.omega, "gamma": params.gamma, "temp": T, "pair": f"{a.value},{b.value}"}

    rec["Z"] = partition_function(params, T)
    el = x_state_elements(params, T)
    rec.update(rho_x=el.x, rho_z=el.z, rho_delta=el.delta, rho_eta=el.eta, rho_y=el.y)
    ts = thermo.thermo_state(params, T)
    for i, p in enumerate(ts.occupations):
        rec[f"P{i + 1}"] = float(p)
    rec["S"], rec["U"] = ts.entropy, ts.internal_energy

    blocks = {
        "vectorized": qfim_vectorized(params, T, (a, b), precision=precision),
        "spectral": qfim_spectral(params, T, (a, b)),
        "integral": qfim_integral(params, T, (a, b)),
    }
    for name, blk in blocks.items():
        rec[f"F11_{name}"], rec[f"F12_{name}"], rec[f"F22_{name}"] = blk.f11, blk.f12, blk.f22
    ref = blocks["vectorized"]
    scale = np.maximum(np.abs(ref.matrix), 1.0)
    rec["route_vectorized"] = ref.route
    rec["route_discrepancy"] = max(float(np.max(np.abs(blk.matrix - ref.matrix) / scale))
                                   for blk in blocks.values())

    rho = gibbs_state(params, T)
    for tag in (a, b):
        L = sld(params, T, tag, precision=precision)
        rec[f"sld_residual_{tag.label}"] = sld_residual(params, T, tag, L)
        rec[f"tr_rho_L_{tag.label}"] = float(np.trace(rho @ L))
    rec["compatibility"] = compatibility(params, T, (a, b), precision=precision)

    names = bound_quantities((a, b))
    rec.update(dict.fromkeys(names))
    rec["flag"], rec["note"] = "", ""
    try:
        rep = estimation.bounds_report(ref)
        values = (rep.var_sim_1, rep.var_sim_2, rep.var_ind_1, rep.var_ind_2,
                  rep.gamma_ratio, estimation.covariance(ref))
        rec.update(zip(names, values))
    except NumericalError as exc:
        rec["flag"] = "singular"
        rec["note"] = str(exc)
    return rec


def cmd_point(args) -> int:
    _require(args, "omega", "gamma", "temp")
    rec = point_report(args.omega, args.gamma, args.temp, args.pair, args.precision)
    with _output(args.out) as fh:
        _emit_record(rec, args.format, fh)
    return EXIT_OK


# ---------------------------------------------------------------- sweep

def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))


def _default_quantities(axis, pair, cycle):
    if cycle:
        return ["q_h", "q_c", "w", "eta", "eta_c"]
    a, b = parse_pair(pair)
    return [f"var_sim_{a.label}", f"var_sim_{b.label}", "gamma_ratio"]


def cmd_sweep(args) -> int:
    _require(args, "axis", "start", "stop")
    cycle_axes = ("omega_b", "omega_a", "t_hot", "t_cold")
    quantities = [q.strip() for q in args.quantities.split(",")] if args.quantities else None
    axis = args.axis.replace("-", "_")
    cycle = axis in cycle_axes or any(q in CYCLE_QUANTITIES for q in quantities or ())
    if not cycle and axis in ("t", "temperature"):
        axis = "temp"
    if quantities is None:
        quantities = _default_quantities(axis, args.pair, cycle)
    keys = ("gamma", "omega_a", "omega_b", "t_hot", "t_cold") if cycle else ("omega", "gamma", "temp")
    fixed = {k: getattr(args, k) for k in keys if getattr(args, k) is not None}
    spec = SweepSpec(axis=axis, start=args.start, stop=args.stop, points=args.points, fixed=fixed,
                     quantities=tuple(quantities), pair=args.pair, log=args.log, tmin=args.tmin,
                     precision=args.precision)
    header, rows = run_sweep(spec)
    fmt = "csv" if args.format == "text" else args.format
    with _output(args.out) as fh:
        write_rows(fh, header, rows, fmt)
    return EXIT_OK


# ---------------------------------------------------------------- figure

def _figure_quantities(rec: figures.FigureRecipe, pair):
    if rec.kind in ("var_sim", "var_ind"):
        label = parse_pair((rec.target, rec.target))[0].label
        return [f"{rec.kind}_{label}"]
    return {
        "gamma_ratio": ["gamma_ratio"],
        "entropy": ["S"],
        "energy": ["U"],
        "cycle": ["q_h", "q_c", "w", "eta", "eta_c"],
        "efficiency": ["eta", "eta_c"],
    }[rec.kind]


def _series_tag(name, value):
    return f"{name}{format(value, 'g')}"


def figure_specs(rec: figures.FigureRecipe, points=None, tmin=DEFAULT_TMIN, precision="auto"):
    """(series tag, SweepSpec) pairs reproducing one figure."""
    quantities = tuple(_figure_quantities(rec, rec.pair))
    series = [(rec.series_param, v) for v in rec.series] or [(None, None)]
    out = []
    for name, value in series:
        fixed = dict(rec.fixed)
        if name is not None:
            fixed[name] = value
        tag = _series_tag(name, value) if name is not None else rec.kind
        out.append((tag, SweepSpec(axis=rec.axis, start=rec.start, stop=rec.stop,
                                   points=points or rec.points, fixed=fixed, quantities=quantities,
                                   pair=rec.pair or ("gamma", "temp"), log=rec.axis == "temp",
                                   tmin=tmin, precision=precision)))
    return out


def cmd_figure(args) -> int:
    try:
        rec = figures.get_recipe(args.id)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    outdir = Path(args.out or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    print(f"figure {rec.id}: {rec.caption}")
    print("fixed: " + ", ".join(f"{k}={format(v, 'g')}" for k, v in rec.fixed.items()))
    if rec.series_param:
        print(f"series {rec.series_param}: " + ", ".join(format(v, "g") for v in rec.series))
    if rec.pair:
        print(f"pair: {','.join(rec.pair)}")
    print(f"source: {rec.source}")
    for tag, spec in figure_specs(rec, args.points, args.tmin, args.precision):
        header, rows = run_sweep(spec)
        path = outdir / f"figure{rec.id}_{tag}.csv"
        with open(path, "w", newline="", encoding="utf-8") as fh:
            write_rows(fh, header, rows, "csv")
        print(f"wrote {path}")
    return EXIT_OK


# ---------------------------------------------------------------- cycle

def cmd_cycle(args) -> int:
    _require(args, "gamma", "omega_a", "omega_b", "t_hot", "t_cold")
    res = thermo.stirling_cycle(args.gamma, args.omega_a, args.omega_b, args.t_hot, args.t_cold)
    rec = {"gamma": args.gamma, "omega_a": args.omega_a, "omega_b": args.omega_b,
           "t_hot": args.t_hot, "t_cold": args.t_cold, **res.as_dict()}
    rec["first_law_residual"] = abs(res.q_ab + res.q_bc + res.q_cd + res.q_da - res.work)
    with _output(args.out) as fh:
        _emit_record(rec, args.format, fh)
    return EXIT_OK


def cmd_version(args) -> int:
    print(f"gravcat {__version__}")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gravcat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--omega", type=_float)
    common.add_argument("--gamma", type=_float)
    common.add_argument("--temp", type=_float)
    common.add_argument("--pair", default="gamma,temp", type=str.lower,
                        help="one of " + " | ".join(PAIR_CHOICES))
    common.add_argument("--precision", default="auto", choices=("auto", "double", "extended"),
                        help="vectorized-route arithmetic (auto escalates to mpmath at low T)")
    common.add_argument("--format", default=None, choices=("text", "csv", "json-lines"))
    common.add_argument("--out", help="output file (directory for `figure`)")

    cyc = argparse.ArgumentParser(add_help=False)
    cyc.add_argument("--omega-a", type=_float)
    cyc.add_argument("--omega-b", type=_float)
    cyc.add_argument("--t-hot", type=_float)
    cyc.add_argument("--t-cold", type=_float)

    p = sub.add_parser("point", parents=[common], help="single-point report")
    p.set_defaults(func=cmd_point, default_format="text")

    p = sub.add_parser("sweep", parents=[common, cyc], help="1-D parameter sweep to CSV")
    p.add_argument("--axis", required=True, help="omega | gamma | temp | omega_b | omega_a | t_hot | t_cold")
    p.add_argument("--start", type=_float, required=True)
    p.add_argument("--stop", type=_float, required=True)
    p.add_argument("--points", type=int, default=100)
    p.add_argument("--log", action="store_true", help="geometric spacing")
    p.add_argument("--tmin", type=_float, default=DEFAULT_TMIN)
    p.add_argument("--quantities", help="comma-separated output columns")
    p.set_defaults(func=cmd_sweep, default_format="csv")

    p = sub.add_parser("figure", parents=[common], help="write CSVs for one figure")
    p.add_argument("id")
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--tmin", type=_float, default=DEFAULT_TMIN)
    p.set_defaults(func=cmd_figure, default_format="csv")

    p = sub.add_parser("cycle", parents=[common, cyc], help="one Stirling cycle")
    p.set_defaults(func=cmd_cycle, default_format="text")

    p = sub.add_parser("version", help="print version")
    p.set_defaults(func=cmd_version, default_format="text")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "format", None) is None:
        args.format = args.default_format
    if hasattr(args, "pair"):
        try:
            parse_pair(args.pair)
        except ValueError as exc:
            print(f"gravcat: error: pair: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except (NumericalError, ArithmeticError, np.linalg.LinAlgError) as exc:
        # LinAlgError subclasses ValueError, so it has to be caught first
        print(f"gravcat: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (UsageError, ValueError) as exc:
        print(f"gravcat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
