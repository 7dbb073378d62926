"""The spectral transform, its inverse, and the spectral-side inner product.

The forward transform integrates f against the eigenfunction kernels with the
unit-mass density C (1-x)^alpha (1+x)^beta.  The x-integral is computed after
the substitution x = tanh(u): the endpoint factors (1 -+ x)^(i mu) that the
band kernels carry become plain Fourier modes in u, and the integrand decays
like exp(-(alpha+1) u) resp. exp(-(beta+1) |u|), so the uniform trapezoid
rule on the u-line is spectrally accurate.  One u-grid serves every spectral
node; only the packed weights differ.

Band parametrization: on the multiplicity-two band lambda = -(beta+1)^2 - s^2
with eta = i s, and d(lambda)/(-i eta) = 2 ds after orientation; on the
multiplicity-one band lambda = -(alpha+1)^2 - t^2 with delta = i t and
measure 2 dt.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .eigenfunctions import phi_discrete, phi_omega1, phi_pm_omega2
from .quadrature import QuadratureRule, legendre_rule
from .spectral import (
    ModelParams,
    Region,
    SpectralPoint,
    discrete_spectrum,
    discrete_weight_N,
    weight_V,
    weight_v,
)

__all__ = [
    "SpectralGrid",
    "TransformField",
    "build_grid",
    "forward_transform",
    "inverse_transform",
    "inner_product_V",
]


@dataclass(frozen=True)
class TransformField:
    """Values of a transform on a SpectralGrid: C^2 on the double band."""

    omega2: np.ndarray  # (n2, 2)
    omega1: np.ndarray  # (n1,)
    discrete: np.ndarray  # (nd,)


@dataclass(frozen=True)
class SpectralGrid:
    params: ModelParams
    # shared x-quadrature (tanh-substituted trapezoid)
    x: np.ndarray  # (nx,)
    # multiplicity-two band, s = |eta|
    s_rule: QuadratureRule
    omega2_points: tuple[SpectralPoint, ...]
    omega2_V: np.ndarray  # (n2, 2, 2)
    omega2_E: np.ndarray  # (n2, nx) forward weights for the plus kernel
    # multiplicity-one band, t = |delta|
    t_rule: QuadratureRule
    omega1_points: tuple[SpectralPoint, ...]
    omega1_v: np.ndarray  # (n1,)
    omega1_E: np.ndarray  # (n1, nx)
    # discrete spectrum
    discrete_points: tuple[SpectralPoint, ...]
    discrete_N: np.ndarray  # (nd,)
    discrete_E: np.ndarray  # (nd, nx)


# exp(-_U_DECADES) is the endpoint truncation level of the u-line integral
_U_DECADES = 28.0


def _x_grid(params: ModelParams, nx: int):
    """Uniform u-grid mapped through tanh, with base (f-independent) weights.

    Returns (x, base) with base_i = h * C (1-x_i)^alpha (1+x_i)^beta
    sech^2(u_i); a kernel evaluated at x and multiplied in completes the
    forward weights for one spectral node.
    """
    a, b = params.alpha, params.beta
    u_right = _U_DECADES / (a + 1.0)
    u_left = _U_DECADES / (b + 1.0)
    u = np.linspace(-u_left, u_right, nx)
    h = u[1] - u[0]
    x = np.tanh(u)
    # 1 -+ x computed in forms stable for large |u|
    one_minus = 2.0 / (1.0 + np.exp(2.0 * u))
    one_plus = 2.0 / (1.0 + np.exp(-2.0 * u))
    sech2 = one_minus * one_plus  # sech^2(u) = (1-x)(1+x)
    base = h * params.C * one_minus**a * one_plus**b * sech2
    base[0] *= 0.5
    base[-1] *= 0.5
    halves = np.stack([0.5 * one_minus, 0.5 * one_plus], axis=1)
    return x, base, halves


def _kernel_row(
    point: SpectralPoint, halves: np.ndarray, params: ModelParams
) -> np.ndarray:
    if point.region is Region.OMEGA2:
        return np.array(
            [phi_pm_omega2(point, 0.0, params, halves=h)[0] for h in halves]
        )
    if point.region is Region.OMEGA1:
        return np.array([phi_omega1(point, 0.0, params, halves=h) for h in halves])
    return np.array([phi_discrete(point, 0.0, params, halves=h) for h in halves])


def build_grid(
    params: ModelParams,
    s_nodes: int = 200,
    t_nodes: int = 100,
    x_nodes: int = 128,
    truncation_s: float = 12.0,
) -> SpectralGrid:
    """Assemble quadrature grids and kernel caches for all spectral regions."""
    if truncation_s <= 0.0 or s_nodes < 1 or x_nodes < 2:
        raise ValueError("grid sizes and the band truncation must be positive")
    b1sq = (params.beta + 1.0) ** 2
    a1sq = (params.alpha + 1.0) ** 2
    x, base, halves = _x_grid(params, x_nodes)

    s_rule = legendre_rule(s_nodes, 0.0, truncation_s)
    omega2_points = tuple(
        SpectralPoint(
            -b1sq - s * s,
            Region.OMEGA2,
            1j * math.sqrt(s * s + b1sq - a1sq),
            1j * s,
        )
        for s in s_rule.nodes
    )
    omega2_V = np.array([weight_V(pt, params) for pt in omega2_points])
    omega2_E = np.array([base * _kernel_row(pt, halves, params) for pt in omega2_points])

    t_max = math.sqrt(b1sq - a1sq)
    if t_max > 0.0 and t_nodes > 0:
        t_rule = legendre_rule(t_nodes, 0.0, t_max)
        omega1_points = tuple(
            SpectralPoint(
                -a1sq - t * t,
                Region.OMEGA1,
                1j * t,
                complex(math.sqrt(b1sq - a1sq - t * t)),
            )
            for t in t_rule.nodes
        )
    else:  # alpha = beta: the single band is empty
        t_rule = QuadratureRule(np.empty(0), np.empty(0))
        omega1_points = ()
    omega1_v = np.array([weight_v(pt, params) for pt in omega1_points])
    omega1_E = np.array(
        [base * _kernel_row(pt, halves, params) for pt in omega1_points]
    ).reshape(len(omega1_points), x_nodes)

    discrete_points = tuple(discrete_spectrum(params))
    discrete_N = np.array([discrete_weight_N(pt, params) for pt in discrete_points])
    discrete_E = np.array(
        [base * _kernel_row(pt, halves, params) for pt in discrete_points]
    ).reshape(len(discrete_points), x_nodes)

    return SpectralGrid(
        params=params,
        x=x,
        s_rule=s_rule,
        omega2_points=omega2_points,
        omega2_V=omega2_V,
        omega2_E=omega2_E,
        t_rule=t_rule,
        omega1_points=omega1_points,
        omega1_v=omega1_v,
        omega1_E=omega1_E,
        discrete_points=discrete_points,
        discrete_N=discrete_N,
        discrete_E=discrete_E,
    )


def forward_transform(f, grid: SpectralGrid) -> TransformField:
    """Transform a callable f (vectorized over x arrays) onto the grid.

    On the double band the two components are the integrals against the plus
    and minus kernels; the minus component is the conjugate of the plus one
    whenever f is real-valued.
    """
    fx = np.asarray(f(grid.x), dtype=complex)
    plus = grid.omega2_E @ fx
    minus = np.conj(grid.omega2_E) @ fx
    omega2 = np.stack([plus, minus], axis=1)
    omega1 = grid.omega1_E @ fx
    discrete = grid.discrete_E @ fx
    return TransformField(omega2=omega2, omega1=omega1, discrete=discrete)


_TAIL_FRACTION = 0.1
_TAIL_REL_TOL = 1e-6


def inverse_transform(field: TransformField, grid: SpectralGrid, x: float) -> complex:
    """Evaluate the inverse transform of a spectral field at x in (-1, 1).

    The double-band integrand pairs the kernel row (phi-, phi+) against the
    (plus, minus) field components through the matrix weight.
    """
    params = grid.params
    D = params.D
    kernels = np.array([phi_pm_omega2(pt, x, params)[::-1] for pt in grid.omega2_points])
    density = np.einsum("jk,jkl,jl->j", kernels, grid.omega2_V, field.omega2)
    contrib2 = grid.s_rule.weights * 2.0 * density / (2.0 * math.pi * D)
    total2 = np.sum(contrib2)
    tail_mask = grid.s_rule.nodes >= (1.0 - _TAIL_FRACTION) * grid.s_rule.nodes[-1]
    tail = abs(np.sum(contrib2[tail_mask]))
    if tail > _TAIL_REL_TOL * max(1.0, abs(total2)):
        warnings.warn(
            f"double-band tail beyond s = {grid.s_rule.nodes[-1]:.3g} contributes "
            f"{tail:.3g}; increase the truncation",
            stacklevel=2,
        )
    total1 = 0.0 + 0.0j
    for j, pt in enumerate(grid.omega1_points):
        total1 += (
            grid.t_rule.weights[j]
            * 2.0
            * field.omega1[j]
            * phi_omega1(pt, x, params)
            * grid.omega1_v[j]
        ) / (2.0 * math.pi * D)
    totald = 0.0 + 0.0j
    for j, pt in enumerate(grid.discrete_points):
        totald += field.discrete[j] * phi_discrete(pt, x, params) * grid.discrete_N[j] / D
    return total2 + total1 + totald


def inner_product_V(field_f: TransformField, field_g: TransformField, grid: SpectralGrid) -> complex:
    """Spectral-side inner product <f, g> whose Parseval partner is <f, g>_H."""
    D = grid.params.D
    density2 = np.einsum(
        "jk,jkl,jl->j", np.conj(field_g.omega2), grid.omega2_V, field_f.omega2
    )
    total = np.sum(grid.s_rule.weights * 2.0 * density2) / (2.0 * math.pi * D)
    if len(grid.omega1_points):
        total += np.sum(
            grid.t_rule.weights
            * 2.0
            * field_f.omega1
            * np.conj(field_g.omega1)
            * grid.omega1_v
        ) / (2.0 * math.pi * D)
    if len(grid.discrete_points):
        total += np.sum(field_f.discrete * np.conj(field_g.discrete) * grid.discrete_N) / D
    return complex(total)
