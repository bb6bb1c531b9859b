# Extended-precision evaluation of the vectorized QFIM / SLD.
#
# At low temperature the Gibbs weights span many decades, cond(R) = p_max/p_min
# exceeds what a float64 solve can resolve, and the computational-basis entries
# of rho lose the small eigenvalues entirely. Here rho is rebuilt from the X-state
# element closed forms in an mpmath context whose precision covers log10 cond(R),
# the derivatives come from mpmath's high-precision differentiation, and the
# 16x16 system R vec(L) = 2 vec(d rho) is solved by LU in that precision.

from __future__ import annotations

import functools
import math

import mpmath
import numpy as np

ORDER = ("gamma", "omega", "temp")
GUARD_DIGITS = 30


def required_digits(log10_cond: float) -> int:
    return max(40, int(math.ceil(log10_cond)) + GUARD_DIGITS)


def _elements(ctx, omega, gamma, T):
    delta = ctx.sqrt(omega * omega + gamma * gamma)
    energies = (-gamma, gamma, -delta, delta)
    e0 = min(energies)
    w = [ctx.exp(-(e - e0) / T) for e in energies]
    Z = ctx.fsum(w)
    p1, p2, p3, p4 = (v / Z for v in w)
    half_sum, half_diff = (p3 + p4) / 2, (p3 - p4) / 2
    x = half_sum - omega / delta * half_diff
    y = half_sum + omega / delta * half_diff
    eta = gamma / delta * half_diff
    return x, (p1 + p2) / 2, (p1 - p2) / 2, eta, y


def _x_matrix(ctx, x, z, d, eta, y):
    return ctx.matrix([[x, 0, 0, eta], [0, z, d, 0], [0, d, z, 0], [eta, 0, 0, y]])


def _vec(ctx, M):
    n = M.rows
    return ctx.matrix([M[i, j] for j in range(n) for i in range(n)])


def _kron(ctx, A, B):
    n, m = A.rows, B.rows
    K = ctx.matrix(n * m, n * m)
    for i in range(n):
        for j in range(n):
            a = A[i, j]
            if not a:
                continue
            for k in range(m):
                for l in range(m):
                    K[i * m + k, j * m + l] = a * B[k, l]
    return K


@functools.lru_cache(maxsize=4096)
def solve_all(omega: float, gamma: float, T: float, digits: int):
    """Return (F, sld) for all three parameters in ORDER.

    F is a 3x3 float array; sld is a tuple of three 4x4 float arrays.
    """
    ctx = mpmath.MPContext()
    ctx.dps = digits
    w, g, t = ctx.mpf(omega), ctx.mpf(gamma), ctx.mpf(T)

    rho = _x_matrix(ctx, *_elements(ctx, w, g, t))
    derivs = []
    for k in range(3):
        def element(v, j, k=k):
            args = [g, w, t]
            args[k] = v
            return _elements(ctx, args[1], args[0], args[2])[j]

        point = (g, w, t)[k]
        derivs.append(_x_matrix(ctx, *(ctx.diff(lambda v: element(v, j), point) for j in range(5))))

    eye = ctx.eye(4)
    R = _kron(ctx, rho.T, eye) + _kron(ctx, eye, rho)
    vecs = [_vec(ctx, d) for d in derivs]
    sols = [ctx.lu_solve(R, 2 * v) for v in vecs]

    F = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            F[i, j] = float((vecs[i].T * sols[j])[0])
    slds = tuple(
        np.array([[float(s[4 * c + r]) for c in range(4)] for r in range(4)]) for s in sols
    )
    return F, slds
