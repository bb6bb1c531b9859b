"""Cramer-Rao bounds for a 2x2 QFIM block.

Simultaneous bounds are the diagonal of F^{-1}; individual bounds are 1/F_kk
(the other parameter treated as known). Gamma compares their sums.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnidentifiableError, UninformativeParameterError
from .qfim import QfimBlock

__all__ = [
    "BoundsReport",
    "DET_RTOL",
    "simultaneous_bounds",
    "individual_bounds",
    "gamma_ratio",
    "covariance",
    "bounds_report",
]

DET_RTOL = 1e-14


def _check_identifiable(block: QfimBlock) -> float:
    if block.f11 <= 0:
        raise UninformativeParameterError(0, block.f11)
    if block.f22 <= 0:
        raise UninformativeParameterError(1, block.f22)
    det = block.det
    # scale-free: det/(f11 f22) = 1 - r^2 with r the information correlation
    threshold = DET_RTOL * block.f11 * block.f22
    if not det > threshold:
        raise UnidentifiableError(det, threshold)
    return det


def simultaneous_bounds(block: QfimBlock) -> tuple[float, float]:
    det = _check_identifiable(block)
    return block.f22 / det, block.f11 / det


def individual_bounds(block: QfimBlock) -> tuple[float, float]:
    if not block.f11 > 0:
        raise UninformativeParameterError(0, block.f11)
    if not block.f22 > 0:
        raise UninformativeParameterError(1, block.f22)
    return 1.0 / block.f11, 1.0 / block.f22


def covariance(block: QfimBlock) -> float:
    """Off-diagonal entry of F^{-1}."""
    return -block.f12 / _check_identifiable(block)


def gamma_ratio(block: QfimBlock) -> float:
    """Gamma = (1/2)(sum of simultaneous bounds) / (sum of individual bounds).

    Gamma < 1 means joint estimation beats estimating one at a time.
    """
    s1, s2 = simultaneous_bounds(block)
    i1, i2 = individual_bounds(block)
    return 0.5 * (s1 + s2) / (i1 + i2)


@dataclass(frozen=True)
class BoundsReport:
    pair: tuple
    var_sim_1: float
    var_sim_2: float
    var_ind_1: float
    var_ind_2: float
    gamma_ratio: float
    qfim: QfimBlock


def bounds_report(block: QfimBlock) -> BoundsReport:
    s1, s2 = simultaneous_bounds(block)
    i1, i2 = individual_bounds(block)
    return BoundsReport(block.pair, s1, s2, i1, i2, 0.5 * (s1 + s2) / (i1 + i2), block)
