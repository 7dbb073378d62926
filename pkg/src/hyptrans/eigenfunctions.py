"""Eigenfunction kernels of the differential operator, brackets, residuals.

Complex powers of (1 -+ x)/2 are taken as exp(w * log(.)) with a real positive
base, so there is no branch ambiguity anywhere on (-1, 1).
"""

from __future__ import annotations

import cmath
import math

from .special import hyp2f1
from .spectral import ModelParams, Region, RegionError, SpectralPoint, spectral_parameters

__all__ = [
    "phi_omega1",
    "phi_pm_omega2",
    "phi_discrete",
    "kernel_value",
    "generic_eigenfunctions",
    "bracket",
    "apply_T",
    "p_coefficient",
]


def _halves(x: float) -> tuple[float, float]:
    if not -1.0 < x < 1.0:
        raise ValueError(f"x = {x} outside (-1, 1)")
    return 0.5 * (1.0 - x), 0.5 * (1.0 + x)


def _power(base: float, w: complex) -> complex:
    return cmath.exp(complex(w) * math.log(base))


def phi_omega1(
    point: SpectralPoint, x: float, params: ModelParams, halves=None
) -> complex:
    """Multiplicity-one band kernel at x.

    `halves` optionally supplies ((1-x)/2, (1+x)/2) computed in a form that
    stays accurate when x is within rounding distance of an endpoint.
    """
    if point.region is not Region.OMEGA1:
        raise RegionError(f"phi_omega1 needs an Omega1 point, got {point.region}")
    a, b, k = params.alpha, params.beta, complex(params.kappa)
    d, e = point.delta, point.eta
    um, up = halves if halves is not None else _halves(x)
    pre = _power(um, -0.5 * (a - d + 1.0)) * _power(up, -0.5 * (b - e + 1.0))
    return pre * hyp2f1(
        0.5 * (1 + d + e - k), 0.5 * (1 + d + e + k), 1.0 + e, up, one_minus_z=um
    )


def phi_pm_omega2(
    point: SpectralPoint, x: float, params: ModelParams, halves=None
) -> tuple[complex, complex]:
    """Multiplicity-two band kernel pair (plus, minus) at x; minus = conj(plus)."""
    if point.region is not Region.OMEGA2:
        raise RegionError(f"phi_pm_omega2 needs an Omega2 point, got {point.region}")
    a, b, k = params.alpha, params.beta, complex(params.kappa)
    d, e = point.delta, point.eta
    um, up = halves if halves is not None else _halves(x)
    values = []
    for sign in (+1.0, -1.0):
        es = sign * e
        pre = _power(um, -0.5 * (a - d + 1.0)) * _power(up, -0.5 * (b - es + 1.0))
        values.append(
            pre
            * hyp2f1(
                0.5 * (1 + d + es - k),
                0.5 * (1 + d + es + k),
                1.0 + es,
                up,
                one_minus_z=um,
            )
        )
    return values[0], values[1]


def phi_discrete(
    point: SpectralPoint, x: float, params: ModelParams, halves=None
) -> float:
    """Discrete-spectrum kernel at x; real since all parameters are real."""
    if point.region is not Region.DISCRETE:
        raise RegionError(f"phi_discrete needs a discrete point, got {point.region}")
    a, b = params.alpha, params.beta
    k = complex(params.kappa).real
    n = point.n
    d, e = point.delta.real, point.eta.real
    um, up = halves if halves is not None else _halves(x)
    pre = um ** (-0.5 * (a - d + 1.0)) * up ** (-0.5 * (b - e + 1.0))
    value = pre * hyp2f1(float(-n), k - n, 1.0 + e, up, one_minus_z=um)
    return value.real


def kernel_value(point: SpectralPoint, x: float, params: ModelParams):
    """Region-dispatching kernel: a pair on Omega2, a scalar elsewhere."""
    if point.region is Region.OMEGA2:
        return phi_pm_omega2(point, x, params)
    if point.region is Region.OMEGA1:
        return phi_omega1(point, x, params)
    if point.region is Region.DISCRETE:
        return phi_discrete(point, x, params)
    raise RegionError("kernel_value is defined on the spectrum only")


def generic_eigenfunctions(
    lam: complex, x: float, params: ModelParams
) -> tuple[complex, complex, complex, complex]:
    """The four solutions (phi+, phi-, psi+, psi-) at generic lambda.

    The psi pair is the phi pair under (alpha, beta, x) -> (beta, alpha, -x).
    """
    a, b, k = params.alpha, params.beta, complex(params.kappa)
    d, e = spectral_parameters(lam, params)
    um, up = _halves(x)
    pre_m = _power(um, -0.5 * (a + d + 1.0))
    phi_minus = (
        pre_m
        * _power(up, -0.5 * (b + e + 1.0))
        * hyp2f1(0.5 * (1 - d - e - k), 0.5 * (1 - d - e + k), 1.0 - e, up)
    )
    phi_plus = (
        pre_m
        * _power(up, -0.5 * (b - e + 1.0))
        * hyp2f1(0.5 * (1 - d + e - k), 0.5 * (1 - d + e + k), 1.0 + e, up)
    )
    pre_p = _power(up, -0.5 * (b + e + 1.0))
    psi_minus = (
        _power(um, -0.5 * (a + d + 1.0))
        * pre_p
        * hyp2f1(0.5 * (1 - d - e - k), 0.5 * (1 - d - e + k), 1.0 - d, um)
    )
    psi_plus = (
        _power(um, -0.5 * (a - d + 1.0))
        * pre_p
        * hyp2f1(0.5 * (1 + d - e - k), 0.5 * (1 + d - e + k), 1.0 + d, um)
    )
    return phi_plus, phi_minus, psi_plus, psi_minus


def p_coefficient(x: float, params: ModelParams) -> float:
    """Leading Sturm-Liouville coefficient p(x) = C (1-x)^(a+2) (1+x)^(b+2)."""
    return params.C * (1.0 - x) ** (params.alpha + 2.0) * (1.0 + x) ** (params.beta + 2.0)


_BRACKET_STEP = 1e-4
# 6-point central first-derivative stencil, O(h^6).
_D1_OFFSETS = (-3, -2, -1, 1, 2, 3)
_D1_WEIGHTS = (-1.0, 9.0, -45.0, 45.0, -9.0, 1.0)


def _derivative(f, x: float, h: float) -> complex:
    acc = 0.0 + 0.0j
    for o, w in zip(_D1_OFFSETS, _D1_WEIGHTS):
        acc += w * complex(f(x + o * h))
    return acc / (60.0 * h)


def bracket(f, g, x: float, params: ModelParams) -> complex:
    """Wronskian bracket p(x) (f' g - f g'), constant for two eigenfunctions."""
    h = _BRACKET_STEP * (1.0 - x * x)
    fp = _derivative(f, x, h)
    gp = _derivative(g, x, h)
    return p_coefficient(x, params) * (fp * complex(g(x)) - complex(f(x)) * gp)


_T_STEP = 1e-3


def apply_T(f, x: float, params: ModelParams, h: float = _T_STEP) -> complex:
    """Apply the differential operator by 4th-order central differences.

    The 5-point stencil must stay inside (-1, 1); callers should keep x away
    from the singular endpoints.
    """
    if abs(x) + 2.0 * h >= 1.0:
        raise ValueError(f"stencil around x = {x} leaves (-1, 1)")
    a, b = params.alpha, params.beta
    fm2, fm1, f0, fp1, fp2 = (complex(f(x + o * h)) for o in (-2, -1, 0, 1, 2))
    d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h)
    d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h)
    r = 1.0 - x * x
    k2 = complex(params.kappa) ** 2
    rho4 = 0.25 * (k2.real - (a + b + 3.0) ** 2)
    return r * r * d2 + r * (b - a - (a + b + 4.0) * x) * d1 + rho4 * r * f0
