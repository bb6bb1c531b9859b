"""Point evaluation, parameter sweeps and CSV / JSON-lines emission.

Numbers are written with 17 significant digits and ``\\n`` line endings so a
fixed sweep is byte-for-byte reproducible.
"""

from __future__ import annotations

import csv
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import estimation, thermo
from .errors import DomainError, NumericalError
from .model import ModelParams
from .qfim import parse_pair, qfim_integral, qfim_spectral, qfim_vectorized
from .thermal import check_temperature, partition_function, x_state_elements

__all__ = [
    "SweepSpec",
    "CYCLE_QUANTITIES",
    "STATE_QUANTITIES",
    "DEFAULT_TMIN",
    "MAX_POINTS",
    "evaluate",
    "evaluate_cycle",
    "grid",
    "run_sweep",
    "format_value",
    "write_rows",
    "thread_count",
]

DEFAULT_TMIN = 0.01
MAX_POINTS = 100_000

STATE_QUANTITIES = ("Z", "rho_x", "rho_z", "rho_delta", "rho_eta", "rho_y", "S", "U", "P1", "P2", "P3", "P4")
QFIM_QUANTITIES = ("F11", "F12", "F22", "det")
CYCLE_QUANTITIES = ("q_ab", "q_bc", "q_cd", "q_da", "q_h", "q_c", "w", "eta", "eta_c", "regime")
MODEL_AXES = ("omega", "gamma", "temp")
CYCLE_AXES = ("omega_b", "omega_a", "gamma", "t_hot", "t_cold")
ROUTES = {"vectorized": None, "spectral": qfim_spectral, "integral": qfim_integral}


def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return ""
        return format(value, ".17g")
    return str(value)


def bound_quantities(pair) -> tuple[str, ...]:
    a, b = parse_pair(pair)
    return (f"var_sim_{a.label}", f"var_sim_{b.label}", f"var_ind_{a.label}",
            f"var_ind_{b.label}", "gamma_ratio", "cov")


def qfim_block(params, T, pair, route="vectorized", precision="auto"):
    if route == "vectorized":
        return qfim_vectorized(params, T, pair, precision=precision)
    try:
        return ROUTES[route](params, T, pair)
    except KeyError:
        raise ValueError(f"unknown route {route!r}") from None


def evaluate(quantities, omega, gamma, temp, pair=("gamma", "temp"), route="vectorized",
             precision="auto") -> dict:
    """Evaluate model/estimation quantities at one point.

    Returns a dict with the requested quantities plus ``flag``: ``singular``
    when the bounds are undefined (values left as None).
    """
    params = ModelParams(omega, gamma)
    T = check_temperature(temp)
    quantities = list(quantities)
    out = dict.fromkeys(quantities)
    out["flag"] = ""

    if any(q in STATE_QUANTITIES for q in quantities):
        el = x_state_elements(params, T)
        ts = thermo.thermo_state(params, T)
        values = {"Z": partition_function(params, T), "rho_x": el.x, "rho_z": el.z,
                  "rho_delta": el.delta, "rho_eta": el.eta, "rho_y": el.y,
                  "S": ts.entropy, "U": ts.internal_energy}
        values.update({f"P{i + 1}": float(p) for i, p in enumerate(ts.occupations)})
        for q in quantities:
            if q in values:
                out[q] = values[q]

    bound_names = bound_quantities(pair)
    wanted_bounds = [q for q in quantities if q in bound_names]
    unknown = [q for q in quantities
               if q not in STATE_QUANTITIES and q not in QFIM_QUANTITIES and q not in bound_names]
    if unknown:
        raise ValueError(f"unknown quantities for pair {','.join(p.value for p in parse_pair(pair))}: "
                         f"{', '.join(unknown)}")
    if not wanted_bounds and not any(q in QFIM_QUANTITIES for q in quantities):
        return out

    try:
        block = qfim_block(params, T, pair, route, precision)
    except NumericalError:
        out["flag"] = "singular"
        return out
    for q, v in zip(QFIM_QUANTITIES, (block.f11, block.f12, block.f22, block.det)):
        if q in out:
            out[q] = v
    if wanted_bounds:
        try:
            rep = estimation.bounds_report(block)
            cov = estimation.covariance(block)
        except NumericalError:
            out["flag"] = "singular"
            return out
        values = dict(zip(bound_names, (rep.var_sim_1, rep.var_sim_2, rep.var_ind_1,
                                        rep.var_ind_2, rep.gamma_ratio, cov)))
        for q in wanted_bounds:
            out[q] = values[q]
    return out


def evaluate_cycle(quantities, gamma, omega_a, omega_b, t_hot, t_cold) -> dict:
    res = thermo.stirling_cycle(gamma, omega_a, omega_b, t_hot, t_cold).as_dict()
    unknown = [q for q in quantities if q not in res]
    if unknown:
        raise ValueError(f"unknown cycle quantities: {', '.join(unknown)}")
    out = {q: res[q] for q in quantities}
    out["flag"] = "" if res["eta"] is not None or "eta" not in quantities else "no-engine"
    return out


@dataclass
class SweepSpec:
    axis: str
    start: float
    stop: float
    points: int
    fixed: dict = field(default_factory=dict)
    quantities: tuple = ()
    pair: tuple = ("gamma", "temp")
    log: bool = False
    tmin: float = DEFAULT_TMIN
    route: str = "vectorized"
    precision: str = "auto"

    @property
    def is_cycle(self) -> bool:
        return self.axis == "omega_b" or any(q in CYCLE_QUANTITIES for q in self.quantities)

    def validate(self):
        if not self.start < self.stop:
            raise ValueError(f"start={self.start} must be < stop={self.stop}")
        if not 2 <= self.points <= MAX_POINTS:
            raise ValueError(f"points={self.points} must be in [2, {MAX_POINTS}]")
        if self.log and self.start <= 0:
            raise ValueError("log spacing needs start > 0")
        axes = CYCLE_AXES if self.is_cycle else MODEL_AXES
        if self.axis not in axes:
            raise ValueError(f"axis {self.axis!r} not in {', '.join(axes)}")
        if not self.is_cycle and self.axis == "temp" and self.start < self.tmin:
            raise ValueError(f"temp start={self.start} below tmin={self.tmin} (lower it with --tmin)")
        missing = [k for k in axes if k != self.axis and self.fixed.get(k) is None]
        if missing:
            raise ValueError(f"missing fixed parameter(s): {', '.join(missing)}")
        if not self.is_cycle:
            ModelParams(self.fixed.get("omega", 0.0), self.fixed.get("gamma", 0.0))
            if self.axis != "temp":
                check_temperature(self.fixed["temp"])
        return self


def grid(start, stop, points, log=False) -> np.ndarray:
    if log:
        return np.geomspace(start, stop, points)
    return np.linspace(start, stop, points)


def thread_count() -> int:
    raw = os.environ.get("GRAVCAT_THREADS", "").strip()
    n = int(raw) if raw else 0
    return n if n > 0 else (os.cpu_count() or 1)


def _row(spec: SweepSpec, value: float) -> dict:
    if spec.is_cycle:
        args = {"gamma": None, "omega_a": None, "omega_b": None, "t_hot": None, "t_cold": None}
        args.update({k: v for k, v in spec.fixed.items() if k in args})
        args[spec.axis] = value
        missing = [k for k, v in args.items() if v is None]
        if missing:
            raise ValueError(f"cycle sweep missing {', '.join(missing)}")
        return evaluate_cycle(spec.quantities, **args)
    args = {"omega": spec.fixed.get("omega"), "gamma": spec.fixed.get("gamma"), "temp": spec.fixed.get("temp")}
    args[spec.axis] = value
    try:
        return evaluate(spec.quantities, pair=spec.pair, route=spec.route,
                        precision=spec.precision, **args)
    except DomainError:
        out = dict.fromkeys(spec.quantities)
        out["flag"] = "domain"
        return out


def run_sweep(spec: SweepSpec, threads: int | None = None):
    """Return (header, rows) for a SweepSpec; rows follow grid order."""
    spec.validate()
    xs = grid(spec.start, spec.stop, spec.points, spec.log)
    header = [spec.axis, *spec.quantities, "flag"]
    threads = thread_count() if threads is None else threads
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda x: _row(spec, float(x)), xs))
    else:
        results = [_row(spec, float(x)) for x in xs]
    rows = [[float(x), *(res[q] for q in spec.quantities), res["flag"]] for x, res in zip(xs, results)]
    return header, rows


def write_rows(stream, header, rows, fmt="csv"):
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])
    elif fmt == "json-lines":
        for row in rows:
            record = {}
            for k, v in zip(header, row):
                if isinstance(v, (float, np.floating)) and math.isnan(v):
                    v = None
                record[k] = float(v) if isinstance(v, np.floating) else v
            stream.write(json.dumps(record) + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")
