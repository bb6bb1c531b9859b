"""Gibbs thermal state of the two-gravcat system.

The state is built from the spectral sum rho = sum_i p_i |psi_i><psi_i| with
ground-energy-subtracted Boltzmann weights, so it stays finite for any T > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidTemperatureError
from .model import ModelParams, eigensystem

__all__ = [
    "XStateElements",
    "check_temperature",
    "boltzmann_weights",
    "partition_function",
    "log_partition_function",
    "gibbs_state",
    "x_state_elements",
    "is_density_matrix",
]


def check_temperature(T, name="temp") -> float:
    try:
        value = float(T)
    except (TypeError, ValueError):
        raise InvalidTemperatureError(T, name) from None
    if not math.isfinite(value) or value <= 0:
        raise InvalidTemperatureError(T, name)
    return value


def boltzmann_weights(energies, T: float) -> np.ndarray:
    """Normalized Boltzmann weights, computed relative to the lowest energy."""
    energies = np.asarray(energies, dtype=float)
    w = np.exp(-(energies - energies.min()) / T)
    return w / w.sum()


def log_partition_function(params: ModelParams, T: float) -> float:
    T = check_temperature(T)
    g, d = params.gamma, params.delta
    # d >= g, so every exponent below is <= 0
    s = 1.0 + math.exp(-2.0 * d / T) + math.exp((g - d) / T) + math.exp(-(g + d) / T)
    return d / T + math.log(s)


def partition_function(params: ModelParams, T: float) -> float:
    """Z = 2 cosh(gamma/T) + 2 cosh(Delta/T); ``inf`` once it overflows."""
    T = check_temperature(T)
    try:
        return 2.0 * math.cosh(params.gamma / T) + 2.0 * math.cosh(params.delta / T)
    except OverflowError:
        return math.inf


def gibbs_state(params: ModelParams, T: float) -> np.ndarray:
    """exp(-H/T) / Z, assembled from the X-state elements."""
    return x_state_elements(params, T).as_matrix()


@dataclass(frozen=True)
class XStateElements:
    """Non-zero entries of the X-shaped thermal state.

    x = rho[0,0], z = rho[1,1] = rho[2,2], delta = rho[1,2], eta = rho[0,3],
    y = rho[3,3].
    """

    x: float
    z: float
    delta: float
    eta: float
    y: float
    beta: float
    Z: float

    def as_matrix(self) -> np.ndarray:
        x, z, d, e, y = self.x, self.z, self.delta, self.eta, self.y
        return np.array([[x, 0, 0, e], [0, z, d, 0], [0, d, z, 0], [e, 0, 0, y]], dtype=float)


def x_state_elements(params: ModelParams, T: float) -> XStateElements:
    """Closed-form entries; gamma = 0 gives exact zeros for eta and delta."""
    T = check_temperature(T)
    E = eigensystem(params).energies
    p1, p2, p3, p4 = boltzmann_weights(E, T)
    cos2, sin2 = params.direction
    if params.degenerate:
        lo = hi = 1.0
    else:
        # 1 -+ omega/Delta; the minus branch as sin^2/(1 + cos) avoids cancellation
        lo, hi = sin2 * sin2 / (1.0 + cos2), 1.0 + cos2
    return XStateElements(
        x=0.5 * (p3 * lo + p4 * hi),
        z=0.5 * (p1 + p2),
        delta=0.5 * (p1 - p2),
        eta=0.5 * sin2 * (p3 - p4),
        y=0.5 * (p3 * hi + p4 * lo),
        beta=1.0 / T,
        Z=partition_function(params, T),
    )


def is_density_matrix(rho, tol=1e-12) -> bool:
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        return False
    if np.abs(rho - rho.conj().T).max() > tol:
        return False
    if abs(np.trace(rho) - 1.0) > tol:
        return False
    evals = np.linalg.eigvalsh(rho)
    return bool(evals.min() >= -tol and np.real(np.trace(rho @ rho)) <= 1.0 + tol)
