"""Parameter derivatives of the thermal state.

``d_rho`` is analytic (product rule on the spectral sum); ``d_rho_fd`` is the
central-difference oracle; ``d_rho_beta`` uses the Gibbs identity and serves the
inverse-temperature reparametrization check.
"""

from __future__ import annotations

import enum
import math

import mpmath
import numpy as np

from .errors import DomainError
from .model import ModelParams, build_hamiltonian, eigensystem
from .thermal import boltzmann_weights, check_temperature, gibbs_state

__all__ = ["ParamTag", "d_rho", "d_rho_eigenbasis", "d_rho_fd", "d_rho_beta", "DEFAULT_FD_STEP"]

DEFAULT_FD_STEP = 1e-5


class ParamTag(str, enum.Enum):
    GAMMA = "gamma"
    OMEGA = "omega"
    TEMPERATURE = "temp"

    @property
    def label(self) -> str:
        """Short column label: gamma, omega or T."""
        return "T" if self is ParamTag.TEMPERATURE else self.value

    @classmethod
    def parse(cls, text) -> ParamTag:
        if isinstance(text, cls):
            return text
        key = str(text).strip().lower()
        aliases = {"t": "temp", "temperature": "temp", "w": "omega", "g": "gamma"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise ValueError(f"unknown parameter {text!r}; expected gamma, omega or temp") from None


def _energy_derivatives(params: ModelParams, wrt: ParamTag) -> np.ndarray:
    cos2, sin2 = params.direction
    if wrt is ParamTag.GAMMA:
        return np.array([-1.0, 1.0, -sin2, sin2])
    return np.array([0.0, 0.0, -cos2, cos2])


def _rotation_term(params: ModelParams, T: float, wrt: ParamTag, p) -> float:
    """(p4 - p3) d nu, the <psi3|d rho|psi4> element.

    d nu = s / (2 Delta^2) with s = omega (gamma) or -gamma (omega) diverges as
    Delta -> 0 while p3 - p4 = (p3 + p4) tanh(Delta/T) vanishes; the product is
    formed as (s/Delta) * tanh(x)/x / (2T) with x = Delta/T to stay finite.
    """
    if wrt is ParamTag.TEMPERATURE:
        return 0.0
    cos2, sin2 = params.direction
    s = cos2 if wrt is ParamTag.GAMMA else -sin2  # omega/Delta or -gamma/Delta
    x = params.delta / T
    sinc_tanh = 1.0 if x < 1e-8 else math.tanh(x) / x
    return -(p[2] + p[3]) * s * sinc_tanh / (2.0 * T)


def d_rho(params: ModelParams, T: float, wrt) -> np.ndarray:
    """Analytic derivative of the Gibbs state with respect to ``wrt``."""
    T = check_temperature(T)
    wrt = ParamTag.parse(wrt)
    if params.degenerate:
        # H = 0: the eigen-parametrization is singular but exp(-H/T)/Z is not;
        # d rho = -(dH - Tr(dH)/4) / (4T) and dH is traceless.
        if wrt is ParamTag.TEMPERATURE:
            return np.zeros((4, 4))
        if wrt is ParamTag.GAMMA:
            dH = -np.fliplr(np.eye(4))
        else:
            dH = np.diag([1.0, 0.0, 0.0, -1.0])
        return -dH / (4.0 * T)

    es = eigensystem(params)
    E, V = es.energies, es.states
    p = boltzmann_weights(E, T)

    a = -E / T**2 if wrt is ParamTag.TEMPERATURE else _energy_derivatives(params, wrt) / T
    dp = p * (np.dot(p, a) - a)
    out = (V * dp) @ V.T
    # eigenvector rotation: d psi3 = -d nu psi4, d psi4 = d nu psi3, so
    # p3 d(psi3 psi3^T) + p4 d(psi4 psi4^T) = (p4 - p3) d nu (psi3 psi4^T + psi4 psi3^T)
    c = _rotation_term(params, T, wrt, p)
    if c:
        cross = np.outer(V[:, 2], V[:, 3])
        out += c * (cross + cross.T)
    return out


def d_rho_eigenbasis(params: ModelParams, T: float, wrt) -> np.ndarray:
    """Matrix elements <m| d rho |n> in the closed-form eigenbasis.

    <m|d rho|n> = delta_mn dp_m + (p_n - p_m) <m|d n>. Only products of
    weights appear, so entries between weakly populated levels keep full
    relative accuracy at low T (projecting ``d_rho`` onto the eigenvectors
    would not). The only non-zero rotation is <psi4|d psi3> = -d nu.
    """
    T = check_temperature(T)
    wrt = ParamTag.parse(wrt)
    if params.degenerate:
        return d_rho(params, T, wrt)  # eigenbasis is the identity there
    es = eigensystem(params)
    E = es.energies
    p = boltzmann_weights(E, T)
    a = -E / T**2 if wrt is ParamTag.TEMPERATURE else _energy_derivatives(params, wrt) / T
    A = np.diag(p * (np.dot(p, a) - a))
    A[2, 3] = A[3, 2] = _rotation_term(params, T, wrt, p)
    return A


def _shifted(params: ModelParams, T: float, wrt: ParamTag, step: float):
    if wrt is ParamTag.TEMPERATURE:
        return params, T + step
    return params.replace(**{wrt.value: getattr(params, wrt.value) + step}), T


def d_rho_fd(params: ModelParams, T: float, wrt, h: float = DEFAULT_FD_STEP,
             precision: str = "double") -> np.ndarray:
    """Central difference (rho(xi + h) - rho(xi - h)) / 2h.

    In float64 the stencil carries a roundoff floor of about eps/h, which at
    h = 1e-5 is comparable to its O(h^2) truncation error. ``precision=
    "extended"`` evaluates the two states with 50 significant digits so the
    truncation term can be observed on its own.
    """
    T = check_temperature(T)
    wrt = ParamTag.parse(wrt)
    if not h > 0:
        raise DomainError("h", h, "step must be > 0")
    if precision not in ("double", "extended"):
        raise ValueError(f"precision must be 'double' or 'extended', got {precision!r}")
    value = T if wrt is ParamTag.TEMPERATURE else getattr(params, wrt.value)
    if wrt is ParamTag.TEMPERATURE and value - h <= 0:
        raise DomainError(wrt.value, value, f"T - h must stay > 0 (h={h})")
    if wrt is not ParamTag.TEMPERATURE and value - h < 0:
        raise DomainError(wrt.value, value, f"{wrt.value} - h must stay >= 0 (h={h})")
    if precision == "extended":
        return _fd_extended(params, T, wrt, h)
    plus = gibbs_state(*_shifted(params, T, wrt, h))
    minus = gibbs_state(*_shifted(params, T, wrt, -h))
    return (plus - minus) / (2.0 * h)


def _fd_extended(params, T, wrt, h, digits=50):
    from . import _extended

    ctx = mpmath.MPContext()
    ctx.dps = digits
    args = {"omega": ctx.mpf(params.omega), "gamma": ctx.mpf(params.gamma), "temp": ctx.mpf(T)}
    step = ctx.mpf(h)
    states = []
    for sign in (1, -1):
        shifted = dict(args)
        shifted[wrt.value] += sign * step
        states.append(_extended._x_matrix(ctx, *_extended._elements(ctx, shifted["omega"],
                                                                    shifted["gamma"], shifted["temp"])))
    diff = (states[0] - states[1]) / (2 * step)
    return np.array([[float(diff[i, j]) for j in range(4)] for i in range(4)])


def d_rho_beta(params: ModelParams, T: float, eigenbasis: bool = False) -> np.ndarray:
    """d rho / d beta = -1/2 {H, rho} + <H> rho.

    With ``eigenbasis=True`` the (diagonal) eigenbasis form
    diag(p_k (<H> - E_k)) is returned instead.
    """
    T = check_temperature(T)
    if eigenbasis:
        E = eigensystem(params).energies
        p = boltzmann_weights(E, T)
        return np.diag(p * (np.dot(p, E) - E))
    H = build_hamiltonian(params)
    rho = gibbs_state(params, T)
    energy = np.trace(H @ rho)
    return -0.5 * (H @ rho + rho @ H) + energy * rho
