import numpy as np
import pytest
from scipy import linalg

from gravcat import ModelParams, build_hamiltonian

OMEGAS = np.linspace(0.1, 3.0, 10)
GAMMAS = np.linspace(0.1, 3.0, 10)
TEMPS = np.geomspace(0.05, 5.0, 10)


def expm_gibbs(omega, gamma, T):
    """Oracle: exp(-H/T)/Tr via scaling-and-squaring, shifted for stability."""
    H = build_hamiltonian(ModelParams(omega, gamma))
    e0 = np.linalg.eigvalsh(H).min()
    M = linalg.expm(-(H - e0 * np.eye(4)) / T)
    return M / np.trace(M)


def coarse_grid(n=4):
    for w in np.linspace(0.1, 3.0, n):
        for g in np.linspace(0.1, 3.0, n):
            for T in np.geomspace(0.05, 5.0, n):
                yield float(w), float(g), float(T)


@pytest.fixture
def ref_point():
    return ModelParams(1.0, 1.5), 0.5


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
