"""Gauss-Jacobi quadrature on (-1, 1) via Golub-Welsch.

Recurrence coefficients follow Gautschi's r_jacobi; the nodes/weights come
from the symmetric tridiagonal eigenproblem.  Weights can be normalized so
they integrate against the unit-mass density C (1-x)^a (1+x)^b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

__all__ = ["QuadratureRule", "jacobi_rule", "gauss_jacobi_rule", "legendre_rule"]


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, values) -> complex:
        return np.sum(self.weights * np.asarray(values))


def _recurrence(n: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """First n Jacobi recurrence coefficients (alpha_k, beta_k), Gautschi style."""
    if n < 1:
        raise ValueError("need at least one node")
    nu = (b - a) / (a + b + 2.0)
    mu = math.exp(
        (a + b + 1.0) * math.log(2.0)
        + math.lgamma(a + 1.0)
        + math.lgamma(b + 1.0)
        - math.lgamma(a + b + 2.0)
    )
    alpha = np.empty(n)
    beta = np.empty(n)
    alpha[0] = nu
    beta[0] = mu
    if n == 1:
        return alpha, beta
    k = np.arange(1, n, dtype=float)
    nab = 2.0 * k + a + b
    alpha[1:] = (b * b - a * a) / (nab * (nab + 2.0))
    beta[1] = 4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0) ** 2 * (a + b + 3.0))
    if n > 2:
        kk = k[1:]
        nab = nab[1:]
        beta[2:] = (
            4.0
            * (kk + a)
            * (kk + b)
            * kk
            * (kk + a + b)
            / (nab * nab * (nab + 1.0) * (nab - 1.0))
        )
    return alpha, beta


def jacobi_rule(n: int, a: float, b: float) -> QuadratureRule:
    """n-point Gauss rule for the raw weight (1-x)^a (1+x)^b on (-1, 1)."""
    alpha, beta = _recurrence(n, a, b)
    nodes, vecs = eigh_tridiagonal(alpha, np.sqrt(beta[1:]))
    weights = beta[0] * vecs[0, :] ** 2
    return QuadratureRule(nodes, weights)


def gauss_jacobi_rule(n: int, params_or_a, b: float | None = None) -> QuadratureRule:
    """n-point rule for the unit-mass density C (1-x)^a (1+x)^b.

    Accepts either a ModelParams (uses its alpha, beta) or explicit (a, b).
    """
    if b is None:
        a, b = params_or_a.alpha, params_or_a.beta
    else:
        a = float(params_or_a)
    rule = jacobi_rule(n, a, b)
    c = 2.0 ** (-a - b - 1.0) * math.exp(
        math.lgamma(a + b + 2.0) - math.lgamma(a + 1.0) - math.lgamma(b + 1.0)
    )
    return QuadratureRule(rule.nodes, c * rule.weights)


def legendre_rule(n: int, lo: float, hi: float) -> QuadratureRule:
    """n-point Gauss-Legendre rule mapped to [lo, hi]."""
    nodes, weights = np.polynomial.legendre.leggauss(n)
    half = 0.5 * (hi - lo)
    return QuadratureRule(lo + half * (nodes + 1.0), half * weights)
