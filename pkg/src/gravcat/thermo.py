"""Equilibrium state functions and the four-stroke quantum Stirling cycle.

The cycle's work parameter is the splitting omega (gamma is held fixed):
A = (omega_a, T_h), B = (omega_b, T_h), C = (omega_b, T_c), D = (omega_a, T_c).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidCycleError
from .model import ModelParams, eigensystem
from .thermal import boltzmann_weights, check_temperature, log_partition_function

__all__ = [
    "ThermoState",
    "CycleResult",
    "Regime",
    "thermo_state",
    "free_energy",
    "stirling_cycle",
    "carnot",
    "REGIME_EPS",
]

REGIME_EPS = 1e-12


@dataclass(frozen=True)
class ThermoState:
    occupations: np.ndarray
    entropy: float
    internal_energy: float


def thermo_state(params: ModelParams, T: float) -> ThermoState:
    T = check_temperature(T)
    E = eigensystem(params).energies
    P = boltzmann_weights(E, T)
    nz = P[P > 0]
    S = float(-np.sum(nz * np.log(nz)))
    return ThermoState(P, max(S, 0.0), float(np.dot(P, E)))


def free_energy(params: ModelParams, T: float) -> float:
    """F = -T ln Z."""
    return -T * log_partition_function(params, T)


class Regime(str, enum.Enum):
    ENGINE = "engine"
    REFRIGERATOR = "refrigerator"
    OTHER = "other"


@dataclass(frozen=True)
class CycleResult:
    q_ab: float
    q_bc: float
    q_cd: float
    q_da: float
    q_h: float
    q_c: float
    work: float
    efficiency: float | None
    carnot: float
    regime: Regime

    @property
    def q_in(self) -> float:
        return self.q_ab

    @property
    def q_out(self) -> float:
        return self.q_cd

    def as_dict(self) -> dict:
        return {
            "q_ab": self.q_ab, "q_bc": self.q_bc, "q_cd": self.q_cd, "q_da": self.q_da,
            "q_h": self.q_h, "q_c": self.q_c, "w": self.work, "eta": self.efficiency,
            "eta_c": self.carnot, "regime": self.regime.value,
        }


def _check_baths(t_hot, t_cold):
    t_hot = check_temperature(t_hot, "t_hot")
    t_cold = check_temperature(t_cold, "t_cold")
    if t_hot < t_cold:
        raise InvalidCycleError("t_hot", t_hot, f"hot bath must not be colder than t_cold={t_cold}")
    return t_hot, t_cold


def carnot(t_hot: float, t_cold: float) -> float:
    t_hot, t_cold = _check_baths(t_hot, t_cold)
    return 1.0 - t_cold / t_hot


def stirling_cycle(gamma: float, omega_a: float, omega_b: float, t_hot: float,
                   t_cold: float) -> CycleResult:
    t_hot, t_cold = _check_baths(t_hot, t_cold)
    pa, pb = ModelParams(omega_a, gamma), ModelParams(omega_b, gamma)
    A, B = thermo_state(pa, t_hot), thermo_state(pb, t_hot)
    C, D = thermo_state(pb, t_cold), thermo_state(pa, t_cold)

    q_ab = t_hot * (B.entropy - A.entropy)
    q_bc = C.internal_energy - B.internal_energy
    q_cd = t_cold * (D.entropy - C.entropy)
    q_da = A.internal_energy - D.internal_energy
    q_h = q_ab + q_da
    q_c = q_bc + q_cd
    work = q_h + q_c

    eps = REGIME_EPS
    if work > eps and q_h > eps:
        regime = Regime.ENGINE
    elif work < -eps and q_c > eps:
        regime = Regime.REFRIGERATOR
    else:
        regime = Regime.OTHER
    efficiency = work / q_h if regime is Regime.ENGINE else None
    return CycleResult(q_ab, q_bc, q_cd, q_da, q_h, q_c, work, efficiency,
                       1.0 - t_cold / t_hot, regime)
