"""Two-gravcat Hamiltonian, its closed-form eigensystem and the geometric coupling.

Units: hbar = k_B = 1; omega, gamma and temperatures share one energy unit.
Basis ordering is the computational basis |00>, |01>, |10>, |11>.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import constants

from .errors import InvalidParameterError

__all__ = [
    "ModelParams",
    "EigenSystem",
    "build_hamiltonian",
    "eigensystem",
    "coupling_from_geometry",
    "mixing_angles",
]


@dataclass(frozen=True)
class ModelParams:
    """Energy splitting ``omega`` and gravitational coupling ``gamma``."""

    omega: float
    gamma: float

    def __post_init__(self):
        for name in ("omega", "gamma"):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise InvalidParameterError(name, value, "not a real number") from None
            if not math.isfinite(value):
                raise InvalidParameterError(name, value, "must be finite")
            if value < 0:
                raise InvalidParameterError(name, value, "must be non-negative")
            object.__setattr__(self, name, value)

    @property
    def delta(self) -> float:
        return math.hypot(self.omega, self.gamma)

    @property
    def direction(self) -> tuple[float, float]:
        """(omega/Delta, gamma/Delta), formed from rescaled inputs so that
        subnormal parameters keep full precision; (0, 0) when degenerate."""
        scale = max(self.omega, self.gamma)
        if scale == 0.0:
            return 0.0, 0.0
        w, g = self.omega / scale, self.gamma / scale
        d = math.hypot(w, g)
        return w / d, g / d

    @property
    def degenerate(self) -> bool:
        """True when omega = gamma = 0 (all four levels at zero energy)."""
        return self.omega == 0.0 and self.gamma == 0.0

    def replace(self, **changes) -> ModelParams:
        return ModelParams(omega=changes.get("omega", self.omega), gamma=changes.get("gamma", self.gamma))


@dataclass(frozen=True)
class EigenSystem:
    """Exact spectrum of the Hamiltonian.

    ``energies`` is ordered (E1, E2, E3, E4) = (-gamma, +gamma, -Delta, +Delta) and
    ``states[:, i]`` is the normalized eigenvector belonging to ``energies[i]``.
    """

    energies: np.ndarray
    states: np.ndarray
    nu_plus: float
    nu_minus: float
    delta_big: float
    degenerate: bool = False

    @property
    def ground_index(self) -> int:
        return 2


def build_hamiltonian(params: ModelParams) -> np.ndarray:
    w, g = params.omega, params.gamma
    return np.array(
        [
            [w, 0.0, 0.0, -g],
            [0.0, 0.0, -g, 0.0],
            [0.0, -g, 0.0, 0.0],
            [-g, 0.0, 0.0, -w],
        ]
    )


def mixing_angles(omega: float, gamma: float) -> tuple[float, float]:
    """Return (nu_plus, nu_minus) = arctan(gamma / (omega +- Delta)).

    nu_plus uses the two-argument arctangent (omega + Delta >= 0, so no branch
    issue). nu_minus = nu_plus - pi/2, which equals arctan(gamma/(omega - Delta))
    for gamma > 0 and gives the gamma -> 0+ limit -pi/2 without dividing by
    omega - Delta.
    """
    nu_plus = math.atan2(gamma, omega + math.hypot(omega, gamma))
    return nu_plus, nu_plus - 0.5 * math.pi


def eigensystem(params: ModelParams) -> EigenSystem:
    w, g = params.omega, params.gamma
    delta = math.hypot(w, g)
    energies = np.array([-g, g, -delta, delta])
    nu_p, nu_m = mixing_angles(w, g)

    if params.degenerate:
        return EigenSystem(energies, np.eye(4), nu_p, nu_m, delta, degenerate=True)

    # The arctan angles sit on the |11> amplitude side: with H[0, 0] = +omega the
    # -Delta state tends to |11> as gamma -> 0.
    r = 1.0 / math.sqrt(2.0)
    states = np.zeros((4, 4))
    states[1, 0] = states[2, 0] = r
    states[1, 1], states[2, 1] = r, -r
    states[0, 2], states[3, 2] = math.sin(nu_p), math.cos(nu_p)
    states[0, 3], states[3, 3] = math.sin(nu_m), math.cos(nu_m)
    return EigenSystem(energies, states, nu_p, nu_m, delta)


def coupling_from_geometry(mass: float, d: float, d_prime: float) -> float:
    """Gravitational coupling G m^2 / 2 (1/d - 1/d') in joules (SI).

    A negative result (d > d') is returned as is, with a warning.
    """
    if mass <= 0:
        raise InvalidParameterError("mass", mass, "must be > 0")
    if d == 0 or d_prime == 0:
        raise ZeroDivisionError("separations d and d_prime must be non-zero")
    value = 0.5 * constants.G * mass**2 * (1.0 / d - 1.0 / d_prime)
    if value < 0:
        warnings.warn(f"negative coupling {value:.6e} J (d > d_prime)", stacklevel=2)
    return value
