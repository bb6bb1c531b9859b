"""Multiparameter thermometry and Stirling-cycle thermodynamics for two coupled gravcats."""

from .calculus import ParamTag, d_rho, d_rho_beta, d_rho_fd
from .errors import (AccuracyError, DomainError, GravcatError, InvalidCycleError,
                     InvalidParameterError, InvalidTemperatureError, NumericalError,
                     SingularStateError, UnidentifiableError, UninformativeParameterError)
from .estimation import (BoundsReport, bounds_report, covariance, gamma_ratio,
                         individual_bounds, simultaneous_bounds)
from .model import EigenSystem, ModelParams, build_hamiltonian, coupling_from_geometry, eigensystem
from .qfim import (QfimBlock, compatibility, qfim_integral, qfim_spectral, qfim_vectorized, sld,
                   sld_closed_form, sld_spectral)
from .thermal import gibbs_state, log_partition_function, partition_function, x_state_elements
from .thermo import CycleResult, Regime, stirling_cycle, thermo_state

__version__ = "0.1.0"

__all__ = [
    "AccuracyError", "BoundsReport", "CycleResult", "DomainError", "EigenSystem", "GravcatError",
    "InvalidCycleError", "InvalidParameterError", "InvalidTemperatureError", "ModelParams",
    "NumericalError", "ParamTag", "QfimBlock", "Regime", "SingularStateError",
    "UnidentifiableError", "UninformativeParameterError", "bounds_report", "build_hamiltonian",
    "compatibility", "coupling_from_geometry", "covariance", "d_rho", "d_rho_beta", "d_rho_fd",
    "eigensystem", "gamma_ratio", "gibbs_state", "individual_bounds", "log_partition_function",
    "partition_function", "qfim_integral", "qfim_spectral", "qfim_vectorized",
    "simultaneous_bounds", "sld", "sld_closed_form", "sld_spectral", "stirling_cycle",
    "thermo_state", "x_state_elements",
]
