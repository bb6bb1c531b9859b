"""Quantum Fisher information matrix and SLD operators.

Three independent routes for the 2x2 QFIM block of a parameter pair:

* vectorized: F_ij = 2 vec[d_i rho]^T R^{-1} vec[d_j rho] with
  R = rho^T (x) I + I (x) rho, solved by Cholesky in the computational basis;
* spectral: F_ij = 2 sum_{m,n} <m|d_i rho|n><n|d_j rho|m> / (p_m + p_n) in the
  closed-form eigenbasis;
* integral: F_ij = 2 int_0^inf Tr[exp(-rho t) d_i rho exp(-rho t) d_j rho] dt,
  either reduced per eigenpair or by adaptive quadrature.

All routes use the factor-2 convention, which makes F_ii = Tr(rho L_i^2).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, linalg

from . import _extended
from .calculus import ParamTag, d_rho, d_rho_eigenbasis
from .errors import AccuracyError, SingularStateError
from .model import ModelParams, eigensystem
from .thermal import boltzmann_weights, check_temperature, gibbs_state

__all__ = [
    "QfimBlock",
    "vec",
    "unvec",
    "super_r",
    "r_condition",
    "spectral_qfim",
    "qfim_vectorized",
    "qfim_spectral",
    "qfim_integral",
    "sld",
    "sld_spectral",
    "sld_closed_form",
    "sld_residual",
    "compatibility",
    "parse_pair",
    "PAIRS",
    "MAX_COND",
    "RANK_CUTOFF",
]

log = logging.getLogger(__name__)

MAX_COND = 1e12
RANK_CUTOFF = 1e-14
PRECISIONS = ("double", "extended", "auto")

PAIRS = (
    (ParamTag.GAMMA, ParamTag.TEMPERATURE),
    (ParamTag.OMEGA, ParamTag.TEMPERATURE),
    (ParamTag.OMEGA, ParamTag.GAMMA),
)


def parse_pair(pair) -> tuple[ParamTag, ParamTag]:
    if isinstance(pair, str):
        pair = pair.split(",")
    a, b = pair
    return ParamTag.parse(a), ParamTag.parse(b)


@dataclass(frozen=True)
class QfimBlock:
    pair: tuple[ParamTag, ParamTag]
    f11: float
    f12: float
    f22: float
    route: str = ""

    @property
    def det(self) -> float:
        return self.f11 * self.f22 - self.f12 * self.f12

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.f11, self.f12], [self.f12, self.f22]])

    @classmethod
    def from_matrix(cls, pair, F, route="") -> QfimBlock:
        F = np.asarray(F, dtype=float)
        return cls(pair=tuple(pair), f11=float(F[0, 0]), f12=float(0.5 * (F[0, 1] + F[1, 0])),
                   f22=float(F[1, 1]), route=route)


def vec(matrix) -> np.ndarray:
    """Column-stacking vectorization."""
    return np.asarray(matrix).reshape(-1, order="F")


def unvec(v, n: int | None = None) -> np.ndarray:
    v = np.asarray(v)
    if n is None:
        n = math.isqrt(v.size)
    return v.reshape((n, n), order="F")


def super_r(rho) -> np.ndarray:
    """R = rho^T (x) I + I (x) rho, so that R vec(L) = vec(L rho + rho L)."""
    rho = np.asarray(rho)
    eye = np.eye(rho.shape[0])
    return np.kron(rho.T, eye) + np.kron(eye, rho)


def r_condition(params: ModelParams, T: float) -> tuple[float, tuple[int, int]]:
    """log10 cond(R) and the eigenpair (m, n) with the smallest p_m + p_n.

    Computed from the closed-form spectrum: the eigenvalues of R are p_m + p_n,
    so cond(R) = p_max / p_min.
    """
    E = eigensystem(params).energies
    lo, hi = int(np.argmin(E)), int(np.argmax(E))
    log10_cond = (E[hi] - E[lo]) / (T * math.log(10.0))
    return log10_cond, (hi, hi)


def _check_precision(precision):
    if precision not in PRECISIONS:
        raise ValueError(f"precision must be one of {PRECISIONS}, got {precision!r}")


def _use_extended(params, T, max_cond, precision):
    log10_cond, smallest = r_condition(params, T)
    if log10_cond <= math.log10(max_cond):
        return False, log10_cond
    if precision == "double":
        raise SingularStateError(10.0**min(log10_cond, 300.0), smallest, max_cond)
    return True, log10_cond


def qfim_vectorized(params: ModelParams, T: float, pair, *, max_cond: float = MAX_COND,
                    precision: str = "double") -> QfimBlock:
    """Vectorized route.

    ``precision="double"`` refuses (SingularStateError) once cond(R) > max_cond.
    ``"extended"`` and ``"auto"`` switch to an mpmath solve whose working
    precision covers cond(R); ``"auto"`` does so only when needed.
    """
    T = check_temperature(T)
    _check_precision(precision)
    pair = parse_pair(pair)
    extended, log10_cond = _use_extended(params, T, max_cond, precision)
    if extended or precision == "extended":
        F3, _ = _extended.solve_all(params.omega, params.gamma, T,
                                    _extended.required_digits(log10_cond))
        idx = [_extended.ORDER.index(p.value) for p in pair]
        return QfimBlock.from_matrix(pair, F3[np.ix_(idx, idx)], route="vectorized-extended")

    rho = gibbs_state(params, T)
    factor = linalg.cho_factor(super_r(rho))
    vs = [vec(d_rho(params, T, p)) for p in pair]
    sols = [linalg.cho_solve(factor, 2.0 * v) for v in vs]
    F = np.array([[vs[i] @ sols[j] for j in range(2)] for i in range(2)])
    return QfimBlock.from_matrix(pair, F, route="vectorized")


def spectral_qfim(weights, states, derivatives, cutoff: float | None = None, *,
                  eigenbasis: bool = False) -> np.ndarray:
    """Spectral-sum QFIM for an arbitrary list of derivative matrices.

    With ``eigenbasis=True`` the derivatives are already <m|d rho|n> and
    ``states`` is ignored. Eigenpairs with p_m + p_n <= cutoff are skipped;
    the default is RANK_CUTOFF for computational-basis input (projection
    roundoff would otherwise be amplified by 1/(p_m + p_n)) and 0 for
    eigenbasis input, whose elements are bounded by the weights themselves.
    """
    if cutoff is None:
        cutoff = 0.0 if eigenbasis else RANK_CUTOFF
    p = np.asarray(weights)
    denom = p[:, None] + p[None, :]
    keep = denom > cutoff
    inv = np.zeros_like(denom)
    inv[keep] = 1.0 / denom[keep]
    if eigenbasis:
        rotated = [np.asarray(d) for d in derivatives]
    else:
        V = np.asarray(states)
        rotated = [V.T @ d @ V for d in derivatives]
    k = len(rotated)
    F = np.empty((k, k))
    for i in range(k):
        for j in range(i, k):
            F[i, j] = F[j, i] = 2.0 * np.sum(rotated[i] * rotated[j].T * inv)
    return F


def qfim_spectral(params: ModelParams, T: float, pair) -> QfimBlock:
    T = check_temperature(T)
    pair = parse_pair(pair)
    es = eigensystem(params)
    p = boltzmann_weights(es.energies, T)
    F = spectral_qfim(p, None, [d_rho_eigenbasis(params, T, t) for t in pair], eigenbasis=True)
    return QfimBlock.from_matrix(pair, F, route="spectral")


def qfim_integral(params: ModelParams, T: float, pair, quadrature: dict | None = None) -> QfimBlock:
    """Integral route.

    With ``quadrature=None`` the time integral is done per eigenpair,
    int_0^inf exp(-(p_m + p_n) t) dt = 1/(p_m + p_n). Pass e.g.
    ``{"rtol": 1e-8}`` to integrate numerically with ``scipy.integrate.quad``
    using matrix exponentials of rho.
    """
    T = check_temperature(T)
    pair = parse_pair(pair)
    if quadrature is None:
        es = eigensystem(params)
        p = boltzmann_weights(es.energies, T)
        mats = [d_rho_eigenbasis(params, T, t) for t in pair]
        F = np.zeros((2, 2))
        for m in range(4):
            for n in range(4):
                rate = p[m] + p[n]
                if rate <= 0.0:
                    continue
                laplace = 1.0 / rate
                for i in range(2):
                    for j in range(2):
                        F[i, j] += 2.0 * mats[i][m, n] * mats[j][n, m] * laplace
        return QfimBlock.from_matrix(pair, F, route="integral")

    rtol = float(quadrature.get("rtol", 1e-8))
    atol = float(quadrature.get("atol", 1e-14))
    limit = int(quadrature.get("limit", 200))
    rho = gibbs_state(params, T)
    derivs = [d_rho(params, T, t) for t in pair]

    F = np.zeros((2, 2))
    for i in range(2):
        for j in range(i, 2):
            def integrand(t, a=derivs[i], b=derivs[j]):
                decay = linalg.expm(-rho * t)
                return np.trace(decay @ a @ decay @ b)

            value, abserr, info, *rest = integrate.quad(
                integrand, 0.0, np.inf, epsrel=rtol, epsabs=atol, limit=limit, full_output=True
            )
            allowed = max(rtol * abs(value), atol)
            if rest or abserr > allowed:
                raise AccuracyError(abserr, allowed)
            F[i, j] = F[j, i] = 2.0 * value
    return QfimBlock.from_matrix(pair, F, route="integral-quadrature")


def sld(params: ModelParams, T: float, wrt, *, max_cond: float = MAX_COND,
        precision: str = "double") -> np.ndarray:
    """L = unvec(2 R^{-1} vec[d rho]); precision handling as in qfim_vectorized."""
    T = check_temperature(T)
    _check_precision(precision)
    wrt = ParamTag.parse(wrt)
    extended, log10_cond = _use_extended(params, T, max_cond, precision)
    if extended or precision == "extended":
        _, slds = _extended.solve_all(params.omega, params.gamma, T,
                                      _extended.required_digits(log10_cond))
        return slds[_extended.ORDER.index(wrt.value)].copy()
    rho = gibbs_state(params, T)
    factor = linalg.cho_factor(super_r(rho))
    L = unvec(linalg.cho_solve(factor, 2.0 * vec(d_rho(params, T, wrt))))
    return 0.5 * (L + L.T)


def sld_spectral(params: ModelParams, T: float, wrt) -> np.ndarray:
    """L = 2 sum_{p_m + p_n > 0} <m|d rho|n> / (p_m + p_n) |m><n|."""
    T = check_temperature(T)
    es = eigensystem(params)
    p = boltzmann_weights(es.energies, T)
    V = es.states
    A = d_rho_eigenbasis(params, T, wrt)
    denom = p[:, None] + p[None, :]
    keep = denom > 0.0
    coeff = np.zeros_like(A)
    coeff[keep] = 2.0 * A[keep] / denom[keep]
    return V @ coeff @ V.T


def sld_closed_form(params: ModelParams, T: float, wrt) -> np.ndarray:
    """SLD entries from the X-state element template.

    Outer block {|00>,|11>} and inner block {|01>,|10>} are solved separately
    in terms of (x, y, eta) and (z, delta) and their derivatives.
    """
    rho = gibbs_state(params, T)
    d = d_rho(params, T, wrt)
    x, y, eta = rho[0, 0], rho[3, 3], rho[0, 3]
    z, dl = rho[1, 1], rho[1, 2]
    dx, dy, deta = d[0, 0], d[3, 3], d[0, 3]
    dz, ddl = d[1, 1], d[1, 2]

    outer = (x + y) * (x * y - eta**2)
    inner = z**2 - dl**2
    L = np.zeros((4, 4))
    L[0, 0] = (eta**2 * (dy - dx) + y * (x + y) * dx - 2 * eta * y * deta) / outer
    L[3, 3] = (eta**2 * (dx - dy) + x * (x + y) * dy - 2 * eta * x * deta) / outer
    L[0, 3] = L[3, 0] = (eta * y * dx + eta * x * dy - 2 * x * y * deta) / (-outer)
    L[1, 1] = L[2, 2] = (z * dz - dl * ddl) / inner
    L[1, 2] = L[2, 1] = (z * ddl - dl * dz) / inner
    return L


def sld_residual(params: ModelParams, T: float, wrt, L) -> float:
    """max |2 d rho - L rho - rho L|."""
    rho = gibbs_state(params, T)
    d = d_rho(params, T, wrt)
    return float(np.abs(2.0 * d - L @ rho - rho @ L).max())


def compatibility(params: ModelParams, T: float, pair, *, tol: float = 1e-9,
                  precision: str = "double") -> float:
    """Weak-commutativity value Tr(rho [L_i, L_j]).

    The trace is purely imaginary for Hermitian SLDs; for this real model it
    vanishes up to rounding. The real-valued residue is returned and a warning
    is logged when its magnitude exceeds ``tol``.
    """
    T = check_temperature(T)
    a, b = parse_pair(pair)
    if a is b:
        return 0.0
    rho = gibbs_state(params, T)
    La = sld(params, T, a, precision=precision)
    Lb = sld(params, T, b, precision=precision)
    value = np.trace(rho @ (La @ Lb - Lb @ La))
    value = float(value.imag) if np.iscomplexobj(value) else float(value)
    if abs(value) > tol:
        log.warning("Tr(rho [L_%s, L_%s]) = %.3e exceeds %.1e", a.value, b.value, value, tol)
    return value
