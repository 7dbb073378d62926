"""Equal-parameter specialization: tridiagonal reduction and Wilson polynomials.

At alpha = beta the odd bands vanish and the operator splits over the even
and odd polynomial subspaces; each half is diagonalized by a one-parameter
family of orthonormal Wilson polynomials in the spectral variable y, with
eigenvalue -((alpha+1)^2 + y^2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .jacobi import five_diag_coeffs
from .special import pochhammer
from .spectral import ModelParams, discrete_spectrum

__all__ = [
    "WilsonParams",
    "tridiag_coeffs",
    "wilson_orthonormal",
    "wilson_even",
    "wilson_odd",
    "diagonalization_residual",
    "diagonalization_check",
]


@dataclass(frozen=True)
class WilsonParams:
    """The four Wilson parameters (a, b, c, d) of one parity family."""

    a: complex
    b: complex
    c: complex
    d: complex

    @staticmethod
    def even(params: ModelParams) -> "WilsonParams":
        al, k = params.alpha, complex(params.kappa)
        return WilsonParams(
            0.5 * (al + 1.0), 0.5 * (al + 1.0), 0.25 * (1.0 + k), 0.25 * (1.0 - k)
        )

    @staticmethod
    def odd(params: ModelParams) -> "WilsonParams":
        al, k = params.alpha, complex(params.kappa)
        return WilsonParams(
            0.5 * (al + 1.0), 0.5 * (al + 1.0), 0.25 * (3.0 + k), 0.25 * (3.0 - k)
        )


def tridiag_coeffs(n: int, params: ModelParams) -> tuple[float, float]:
    """(a_n, c_n) of the tridiagonal form T phi_n = a_n phi_{n+2} + c_n phi_n
    + a_{n-2} phi_{n-2}, valid only at alpha = beta."""
    a = params.alpha
    if params.beta != a:
        raise ValueError("the tridiagonal reduction requires alpha = beta")
    if n < 0:
        return 0.0, 0.0
    k = complex(params.kappa)
    s3 = n + 0.5 * (2.0 * a + 3.0)
    fac3 = -((s3 + 0.5 * k) * (s3 - 0.5 * k)).real  # (n+(2a+3+k)/2)(n+(2a+3-k)/2)
    a_n = (
        -fac3
        / (2.0 * n + 2.0 * a + 3.0)
        * math.sqrt(
            (n + 2.0)
            * (n + 1.0)
            * (n + 2.0 * a + 1.0)
            * (n + 2.0 * a + 2.0)
            / ((2.0 * n + 2.0 * a + 1.0) * (2.0 * n + 2.0 * a + 5.0))
        )
    )
    c_n = (
        (n + 2.0 * a + 1.0)
        * (n + 2.0 * a + 2.0)
        * fac3
        / ((2.0 * n + 2.0 * a + 1.0) * (2.0 * n + 2.0 * a + 3.0))
    )
    if n >= 2:  # the n(n-1) factor kills this term (and its 0/0) for n < 2
        s1 = n + 0.5 * (2.0 * a - 1.0)
        fac1 = -((s1 + 0.5 * k) * (s1 - 0.5 * k)).real
        c_n += n * (n - 1.0) * fac1 / (
            (2.0 * n + 2.0 * a - 1.0) * (2.0 * n + 2.0 * a + 1.0)
        )
    return a_n, c_n


def wilson_orthonormal(n: int, ysq: float, a: complex, b: complex, c: complex, d: complex) -> float:
    """Orthonormal Wilson polynomial W_n(y^2; a, b, c, d) at y^2 = ysq >= 0."""
    if n < 0:
        return 0.0
    a, b, c, d = (complex(v) for v in (a, b, c, d))
    s = a + b + c + d
    norm_sq = (
        pochhammer(a + b, n)
        * pochhammer(a + c, n)
        * pochhammer(a + d, n)
        * pochhammer(s, 2 * n)
        / (
            math.factorial(n)
            * pochhammer(b + c, n)
            * pochhammer(b + d, n)
            * pochhammer(c + d, n)
            * pochhammer(n + s - 1.0, n)
        )
    )
    iy = 1j * math.sqrt(ysq)
    # terminating 4F3(-n, n+s-1, a+iy, a-iy; a+b, a+c, a+d; 1)
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    for l in range(n):
        term *= (
            (-n + l)
            * (n + s - 1.0 + l)
            * (a + iy + l)
            * (a - iy + l)
            / ((a + b + l) * (a + c + l) * (a + d + l) * (l + 1.0))
        )
        total += term
    value = cmath.sqrt(norm_sq) * total
    if abs(value.imag) > 1e-9 * max(1.0, abs(value.real)):
        raise ArithmeticError(f"Wilson polynomial not numerically real: {value}")
    return value.real


def wilson_even(m: int, y: float, params: ModelParams) -> float:
    """Even-subspace eigenvector entry at spectral coordinate y.

    The argument scaling (y/2)^2 pairs with the halved/quartered parameter
    set; it is fixed by requiring the three-term recurrence below to hold.
    """
    a = params.alpha
    k = complex(params.kappa)
    return wilson_orthonormal(
        m, 0.25 * y * y, 0.5 * (a + 1.0), 0.5 * (a + 1.0), 0.25 * (1.0 + k), 0.25 * (1.0 - k)
    )


def wilson_odd(m: int, y: float, params: ModelParams) -> float:
    """Odd-subspace eigenvector entry at spectral coordinate y."""
    a = params.alpha
    k = complex(params.kappa)
    return wilson_orthonormal(
        m, 0.25 * y * y, 0.5 * (a + 1.0), 0.5 * (a + 1.0), 0.25 * (3.0 + k), 0.25 * (3.0 - k)
    )


def diagonalization_residual(params: ModelParams, m_max: int, ys) -> float:
    """Max residual of the even/odd three-term recurrences against the
    eigenvalue -((alpha+1)^2 + y^2); zero in exact arithmetic."""
    a1sq = (params.alpha + 1.0) ** 2
    worst = 0.0
    for y in ys:
        lam = -(a1sq + y * y)
        for m in range(m_max + 1):
            we = [wilson_even(j, y, params) for j in (m - 1, m, m + 1)]
            a_hi, c_mid = tridiag_coeffs(2 * m, params)
            a_lo = tridiag_coeffs(2 * m - 2, params)[0] if m >= 1 else 0.0
            res = lam * we[1] - (a_hi * we[2] + c_mid * we[1] + a_lo * we[0])
            worst = max(worst, abs(res) / max(1.0, abs(lam * we[1])))
            wo = [wilson_odd(j, y, params) for j in (m - 1, m, m + 1)]
            a_hi, c_mid = tridiag_coeffs(2 * m + 1, params)
            a_lo = tridiag_coeffs(2 * m - 1, params)[0] if m >= 1 else 0.0
            res = lam * wo[1] - (a_hi * wo[2] + c_mid * wo[1] + a_lo * wo[0])
            worst = max(worst, abs(res) / max(1.0, abs(lam * wo[1])))
    return worst


def diagonalization_check(params: ModelParams, m_max: int = 4, ys=(0.3, 1.0, 2.0)) -> float:
    """Guarded diagonalization report: requires alpha = beta and an empty
    discrete spectrum, the regime where the Wilson families span everything."""
    if params.alpha != params.beta:
        raise ValueError("diagonalization_check requires alpha = beta")
    if discrete_spectrum(params):
        raise ValueError("diagonalization_check requires an empty discrete spectrum")
    return diagonalization_residual(params, m_max, ys)
