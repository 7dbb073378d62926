"""Orthonormal Jacobi polynomials and the five-diagonal operator coefficients.

All polynomials are orthonormal with respect to the *normalized* weight
C (1-x)^alpha (1+x)^beta on (-1, 1), i.e. <phi_n, phi_m> = delta_nm with
total mass one.
"""

from __future__ import annotations

import math

import numpy as np

from .spectral import ModelParams

__all__ = [
    "jacobi_poly",
    "norm_h",
    "phi_n",
    "Phi_n",
    "connection_coeffs",
    "five_diag_coeffs",
]


def jacobi_poly(n: int, a: float, b: float, x):
    """Classical Jacobi polynomial P_n^(a,b)(x) by three-term recurrence."""
    x = np.asarray(x, dtype=float)
    if n < 0:
        raise ValueError("degree must be non-negative")
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = 0.5 * (a - b + (a + b + 2.0) * x)
    for k in range(1, n):
        c1 = 2.0 * (k + 1.0) * (k + a + b + 1.0) * (2.0 * k + a + b)
        c2 = (2.0 * k + a + b + 1.0) * (a * a - b * b)
        c3 = (2.0 * k + a + b) * (2.0 * k + a + b + 1.0) * (2.0 * k + a + b + 2.0)
        c4 = 2.0 * (k + a) * (k + b) * (2.0 * k + a + b + 2.0)
        p0, p1 = p1, ((c2 + c3 * x) * p1 - c4 * p0) / c1
    return p1


def norm_h(n: int, a: float, b: float) -> float:
    """Squared norm of P_n^(a,b) against the normalized weight.

    h_n = (a+b+1)/(2n+a+b+1) * (a+1)_n (b+1)_n / ((a+b+1)_n n!).
    """
    if n == 0:
        return 1.0
    log_ratio = (
        math.lgamma(a + 1.0 + n) - math.lgamma(a + 1.0)
        + math.lgamma(b + 1.0 + n) - math.lgamma(b + 1.0)
        - math.lgamma(a + b + 1.0 + n) + math.lgamma(a + b + 1.0)
        - math.lgamma(n + 1.0)
    )
    return (a + b + 1.0) / (2.0 * n + a + b + 1.0) * math.exp(log_ratio)


def phi_n(n: int, x, params: ModelParams):
    """Orthonormal Jacobi polynomial for the base weight (alpha, beta)."""
    a, b = params.alpha, params.beta
    return jacobi_poly(n, a, b, x) / math.sqrt(norm_h(n, a, b))


def Phi_n(n: int, x, params: ModelParams):
    """Orthonormal Jacobi polynomial for the shifted weight (alpha+1, beta+1)."""
    a, b = params.alpha + 1.0, params.beta + 1.0
    return jacobi_poly(n, a, b, x) / math.sqrt(norm_h(n, a, b))


def connection_coeffs(n: int, params: ModelParams) -> tuple[float, float, float]:
    """(alpha_n, beta_n, gamma_n) with phi_n = a_n Phi_n + b_n Phi_{n-1} + g_n Phi_{n-2}."""
    a, b = params.alpha, params.beta
    rk = 2.0 / math.sqrt(params.K)
    an = (
        rk
        / (2.0 * n + a + b + 2.0)
        * math.sqrt(
            (a + n + 1.0)
            * (b + n + 1.0)
            * (n + a + b + 1.0)
            * (n + a + b + 2.0)
            / ((a + b + 2.0 * n + 1.0) * (a + b + 2.0 * n + 3.0))
        )
    )
    if n < 1:
        bn = 0.0
    else:
        bn = (
            -rk
            * (b - a)
            * math.sqrt(n * (n + a + b + 1.0))
            / ((a + b + 2.0 * n) * (a + b + 2.0 * n + 2.0))
        )
    if n < 2:
        gn = 0.0
    else:
        gn = (
            -rk
            / (2.0 * n + a + b)
            * math.sqrt(
                n
                * (n - 1.0)
                * (a + n)
                * (b + n)
                / ((a + b + 2.0 * n - 1.0) * (a + b + 2.0 * n + 1.0))
            )
        )
    return an, bn, gn


def _lam_plus_rho(n: int, params: ModelParams) -> float:
    # Lambda_n + rho = -(n + (a+b+3+k)/2)(n + (a+b+3-k)/2), factored so that
    # purely imaginary kappa contributes -|kappa|^2/4 exactly.
    a, b = params.alpha, params.beta
    k = complex(params.kappa)
    s = 0.5 * (a + b + 3.0)
    value = -(n + s + 0.5 * k) * (n + s - 0.5 * k)
    return value.real


def five_diag_coeffs(n: int, params: ModelParams) -> tuple[float, float, float]:
    """(a_n, b_n, c_n): the bands of T in the orthonormal Jacobi basis.

    T phi_n = a_n phi_{n+2} + b_n phi_{n+1} + c_n phi_n
              + b_{n-1} phi_{n-1} + a_{n-2} phi_{n-2},   a_n < 0.
    """
    if n < -2:
        raise ValueError("band index must be >= -2")
    if n < 0:
        return 0.0, 0.0, 0.0
    K = params.K
    an_, bn_, gn_ = connection_coeffs(n, params)
    _, bn1, gn1 = connection_coeffs(n + 1, params)
    _, _, gn2 = connection_coeffs(n + 2, params)
    l0 = _lam_plus_rho(n, params)
    lm1 = _lam_plus_rho(n - 1, params)
    a_band = K * an_ * gn2 * l0
    # both products live on the shared shifted-basis indices n and n-1
    b_band = K * an_ * bn1 * l0 + K * bn_ * gn1 * lm1
    c_band = K * an_ * an_ * l0 + K * bn_ * bn_ * lm1
    if n >= 2:
        c_band += K * gn_ * gn_ * _lam_plus_rho(n - 2, params)
    return a_band, b_band, c_band
