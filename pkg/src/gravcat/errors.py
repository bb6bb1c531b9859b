"""Exception hierarchy.

Domain/usage problems derive from ``ValueError``; numerical failures derive
from ``ArithmeticError`` so callers (and the CLI) can map them separately.
"""


class GravcatError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(GravcatError, ValueError):
    """A model parameter is non-finite or outside the supported domain."""

    def __init__(self, name, value, reason="invalid value"):
        self.name = name
        self.value = value
        super().__init__(f"{name}={value!r}: {reason}")


class InvalidTemperatureError(InvalidParameterError):
    def __init__(self, value, name="temp"):
        super().__init__(name, value, "temperature must be finite and > 0")


class DomainError(InvalidParameterError):
    """A derivative or finite-difference stencil leaves the valid domain."""


class InvalidCycleError(InvalidParameterError):
    pass


class NumericalError(GravcatError, ArithmeticError):
    """Base class for numerical failures (CLI exit code 3)."""


class SingularStateError(NumericalError):
    """The superoperator R is too ill-conditioned for the requested precision."""

    def __init__(self, cond, pair, limit):
        self.cond = cond
        self.pair = pair
        self.limit = limit
        m, n = pair
        super().__init__(
            f"R is near-singular: cond={cond:.3e} > {limit:.1e}; smallest "
            f"eigenvalue p_{m + 1}+p_{n + 1} (eigenstates {m + 1},{n + 1})"
        )


class UnidentifiableError(NumericalError):
    """det(F) is too small for the pair to be estimated jointly."""

    def __init__(self, det, threshold):
        self.det = det
        self.threshold = threshold
        super().__init__(f"unidentifiable pair: det(F)={det:.3e} <= {threshold:.3e}")


class UninformativeParameterError(NumericalError):
    def __init__(self, index, value):
        self.index = index
        self.value = value
        super().__init__(f"diagonal Fisher information F[{index}]={value!r} is not positive")


class AccuracyError(NumericalError):
    def __init__(self, achieved, requested):
        self.achieved = achieved
        self.requested = requested
        super().__init__(
            f"quadrature did not converge: achieved {achieved:.3e}, requested {requested:.3e}"
        )
