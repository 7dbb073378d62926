"""Matrix-valued orthogonal polynomials built from the five-diagonal bands.

The transform of the orthonormal polynomial basis has a closed series form
(f_phi_series); pairs of consecutive transforms satisfy a 2x2 three-term
recurrence whose polynomials are orthogonal against the spectral matrix
weights W1, W2.
"""

from __future__ import annotations

import cmath
import math
import warnings

import numpy as np

from .jacobi import five_diag_coeffs
from .special import hyp3f2_unit, log_gamma, pochhammer
from .spectral import ModelParams, Region, SpectralPoint
from .transform import SpectralGrid, TransformField, forward_transform

__all__ = [
    "f_phi_series",
    "recurrence_matrices",
    "matrix_poly_eval",
    "weight_W",
    "orthogonality_gram",
]


def f_phi_series(n: int, delta: complex, eta: complex, params: ModelParams) -> complex:
    """Closed series form of the transform of the n-th basis polynomial.

    Valid for Re(alpha - delta + 1) > 0 (both bands) and terminating on the
    discrete spectrum.
    """
    a, b = params.alpha, params.beta
    k = complex(params.kappa)
    delta, eta = complex(delta), complex(eta)
    # the leading constant makes the series equal the transform of phi_n under
    # the unit-mass weight normalization used throughout this package
    log_dn = (
        0.5
        * (
            math.log((2.0 * n + a + b + 1.0) / (a + b + 1.0))
            + math.lgamma(a + b + 1.0 + n) - math.lgamma(a + b + 1.0)
            + math.lgamma(a + 1.0 + n) - math.lgamma(a + 1.0)
            - math.lgamma(n + 1.0)
            - math.lgamma(b + 1.0 + n) + math.lgamma(b + 1.0)
        )
        + math.lgamma(a + b + 2.0)
        + log_gamma(0.5 * (a + delta + 1.0))
        + log_gamma(0.5 * (b + eta + 1.0))
        - math.lgamma(a + 1.0)
        - math.lgamma(b + 1.0)
        - log_gamma(0.5 * (a + b + eta + delta + 2.0))
    )
    total = 0.0 + 0.0j
    half_sum = 0.5 * (a + b + eta + delta + 2.0)
    for l in range(n + 1):
        coeff = (
            pochhammer(float(-n), l)
            * pochhammer(n + a + b + 1.0, l)
            * pochhammer(0.5 * (a + delta + 1.0), l)
            / (
                math.factorial(l)
                * pochhammer(a + 1.0, l)
                * pochhammer(half_sum, l)
            )
        )
        total += coeff * hyp3f2_unit(
            0.5 * (1.0 + delta + eta + k),
            0.5 * (1.0 + delta + eta - k),
            0.5 * (b + eta + 1.0),
            1.0 + eta,
            half_sum + l,
        )
    return cmath.exp(log_dn) * total


def recurrence_matrices(n: int, params: ModelParams) -> tuple[np.ndarray, np.ndarray]:
    """(A_n, B_n) blocks of the 2x2 three-term recurrence, from the bands."""
    a0, b0, c0 = five_diag_coeffs(2 * n, params)
    a1, b1, c1 = five_diag_coeffs(2 * n + 1, params)
    A = np.array([[a0, 0.0], [b1, a1]])
    B = np.array([[c0, b0], [b0, c1]])
    if abs(a0 * a1) < 1e-12:
        warnings.warn(
            f"A_{n} nearly singular (|a_{2*n} a_{2*n+1}| = {abs(a0*a1):.3g}); "
            "the matrix recurrence cannot advance",
            stacklevel=2,
        )
    return A, B


_DET_GUARD = 1e-12


def _inv2(M: np.ndarray) -> np.ndarray:
    det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    if abs(det) < _DET_GUARD:
        raise ArithmeticError(f"recurrence block singular: det = {det:.3g}")
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]]) / det


def matrix_poly_eval(n: int, lam: complex, params: ModelParams) -> np.ndarray:
    """P_n(lambda) by the forward recurrence from P_{-1} = 0, P_0 = I."""
    if n < 0:
        return np.zeros((2, 2), dtype=complex)
    p_prev = np.zeros((2, 2), dtype=complex)
    p_cur = np.eye(2, dtype=complex)
    lam_i = complex(lam) * np.eye(2)
    for m in range(n):
        A, B = recurrence_matrices(m, params)
        if m > 0:
            A_prev_t = recurrence_matrices(m - 1, params)[0].T
        else:
            A_prev_t = np.zeros((2, 2))
        p_next = _inv2(A) @ ((lam_i - B) @ p_cur - A_prev_t @ p_prev)
        p_prev, p_cur = p_cur, p_next
    return p_cur


def weight_W(point: SpectralPoint, params: ModelParams) -> np.ndarray:
    """Matrix orthogonality weight at a spectral point, from the series.

    On the double band this is the V-Gram of the two C^2 transform vectors;
    elsewhere it is the rank-one outer product of the scalar transforms.
    """
    from .spectral import weight_V

    if point.region is Region.OMEGA2:
        vecs = [
            np.array(
                [
                    f_phi_series(n, point.delta, point.eta, params),
                    f_phi_series(n, point.delta, -point.eta, params),
                ]
            )
            for n in (0, 1)
        ]
        V = weight_V(point, params)
        return np.array(
            [[np.conj(vecs[i]) @ V @ vecs[j] for j in (0, 1)] for i in (0, 1)]
        )
    f0 = f_phi_series(0, point.delta, point.eta, params)
    f1 = f_phi_series(1, point.delta, point.eta, params)
    return np.array(
        [
            [abs(f0) ** 2, f0 * np.conj(f1)],
            [np.conj(f0) * f1, abs(f1) ** 2],
        ]
    )


def _basis_fields(grid: SpectralGrid) -> tuple[TransformField, TransformField]:
    from .jacobi import phi_n

    return tuple(
        forward_transform(lambda x, n=n: phi_n(n, x, grid.params), grid)
        for n in (0, 1)
    )


def orthogonality_gram(m: int, n: int, grid: SpectralGrid) -> np.ndarray:
    """Discretized Gram block of P_m against P_n; delta_mn I in exact arithmetic.

    The weights W are assembled from quadrature transforms of the first two
    basis polynomials (the series form is the independent cross-check).
    """
    params = grid.params
    D = params.D
    field0, field1 = _basis_fields(grid)
    total = np.zeros((2, 2), dtype=complex)
    for j, pt in enumerate(grid.omega2_points):
        vecs = [field0.omega2[j], field1.omega2[j]]
        V = grid.omega2_V[j]
        W2 = np.array(
            [[np.conj(vecs[i]) @ V @ vecs[l] for l in (0, 1)] for i in (0, 1)]
        )
        Pm = matrix_poly_eval(m, pt.lam, params)
        Pn = matrix_poly_eval(n, pt.lam, params)
        total += grid.s_rule.weights[j] * 2.0 * (Pm @ W2 @ Pn.conj().T) / (2.0 * math.pi * D)
    for j, pt in enumerate(grid.omega1_points):
        f0, f1 = field0.omega1[j], field1.omega1[j]
        W1 = np.array(
            [[f0 * np.conj(f0), f0 * np.conj(f1)], [f1 * np.conj(f0), f1 * np.conj(f1)]]
        )
        Pm = matrix_poly_eval(m, pt.lam, params)
        Pn = matrix_poly_eval(n, pt.lam, params)
        total += (
            grid.t_rule.weights[j]
            * 2.0
            * grid.omega1_v[j]
            * (Pm @ W1 @ Pn.conj().T)
            / (2.0 * math.pi * D)
        )
    for j, pt in enumerate(grid.discrete_points):
        f0, f1 = field0.discrete[j], field1.discrete[j]
        W1 = np.array(
            [[f0 * np.conj(f0), f0 * np.conj(f1)], [f1 * np.conj(f0), f1 * np.conj(f1)]]
        )
        Pm = matrix_poly_eval(m, pt.lam, params)
        Pn = matrix_poly_eval(n, pt.lam, params)
        total += grid.discrete_N[j] * (Pm @ W1 @ Pn.conj().T) / D
    return total
