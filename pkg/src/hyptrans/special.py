"""Complex log-gamma and hypergeometric series building blocks.

Everything here is a pure function of its arguments; all gamma ratios are
assembled in log space so quotients stay finite for arguments up to a few
hundred in modulus.
"""

from __future__ import annotations

import cmath
import functools
import math
import warnings

import mpmath
import numpy as np

__all__ = [
    "PoleError",
    "ConvergenceError",
    "DegenerateParameterError",
    "SlowConvergenceWarning",
    "log_gamma",
    "gamma_product",
    "pochhammer",
    "hyp2f1",
    "hyp3f2_unit",
]


class PoleError(ValueError):
    """Gamma-type function evaluated at a non-positive integer."""


class ConvergenceError(ArithmeticError):
    """A hypergeometric series failed to reach tolerance within the term cap."""


class DegenerateParameterError(ValueError):
    """Parameters sit (numerically) on a degenerate configuration."""


class SlowConvergenceWarning(UserWarning):
    """The convergence abscissa of a series is uncomfortably small."""


MAX_TERMS = 100_000
_SERIES_EPS = 1e-16
# Switch point between the direct Gauss series and the z <-> 1-z connection
# formula; both series then converge at ratio <= 1/2.
Z_SWITCH = 0.5

# Lanczos coefficients, g = 7, 9 terms.
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_POLE_TOL = 1e-14
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


def _nonpos_int(z: complex, tol: float = _POLE_TOL) -> bool:
    """True if z is within tol of a non-positive integer."""
    z = complex(z)
    if z.real > 0.5 or abs(z.imag) > tol:
        return False
    return abs(z.real - round(z.real)) <= tol


def _exact_nonpos_int(z: complex) -> bool:
    """True if z is exactly a non-positive integer (terminating-series check)."""
    z = complex(z)
    return z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real)


def log_gamma(z: complex) -> complex:
    """Principal branch of log Gamma(z) via the Lanczos approximation.

    For Re(z) < 0.5 the value is reached by the upward recurrence
    log Gamma(z) = log Gamma(z+1) - log(z), which stays on the principal
    branch (the cut of loggamma lies on the negative real axis).
    """
    z = complex(z)
    if _nonpos_int(z):
        raise PoleError(f"log_gamma pole at z = {z}")
    shift = 0.0 + 0.0j
    while z.real < 0.5:
        shift += cmath.log(z)
        z = z + 1.0
    w = z - 1.0
    series = _LANCZOS_C[0]
    for i, c in enumerate(_LANCZOS_C[1:], start=1):
        series += c / (w + i)
    t = w + _LANCZOS_G + 0.5
    return (_LOG_SQRT_2PI + (w + 0.5) * cmath.log(t) - t + cmath.log(series)) - shift


def gamma_product(args) -> complex:
    """Product Gamma(a_1) * ... * Gamma(a_n), computed in log space."""
    total = 0.0 + 0.0j
    for a in args:
        total += log_gamma(a)
    return cmath.exp(total)


def pochhammer(a: complex, k: int) -> complex:
    """Shifted factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer order must be non-negative")
    result = 1.0 + 0.0j
    for j in range(k):
        result *= a + j
    return result


def _gauss_series(a: complex, b: complex, c: complex, z: float) -> complex:
    """Sum the Gauss 2F1 series at |z| <= Z_SWITCH (or any z if terminating)."""
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    for k in range(MAX_TERMS):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if term == 0.0:
            return total
        if abs(term) <= _SERIES_EPS * max(1.0, abs(total)) and k > 2:
            return total
    raise ConvergenceError(
        f"2F1 series did not converge for a={a}, b={b}, c={c}, z={z}"
    )


def hyp2f1(a: complex, b: complex, c: complex, z: float, one_minus_z: float | None = None) -> complex:
    """Gauss hypergeometric 2F1(a, b; c; z) for real z in [0, 1).

    Uses the direct series for z <= Z_SWITCH and the z <-> 1-z connection
    formula beyond it.  The connection path needs c-a-b away from the
    integers; the kernels evaluated here have c-a-b purely imaginary on the
    open spectral bands, so that degeneracy can only occur at band endpoints.

    `one_minus_z` lets a caller supply 1-z in a cancellation-free form, which
    keeps the connection formula accurate (and defined) when z rounds to 1.
    """
    a, b, c = complex(a), complex(b), complex(c)
    if one_minus_z is None:
        one_minus_z = 1.0 - z
    if not (0.0 <= z <= 1.0 and one_minus_z > 0.0):
        raise ValueError(f"hyp2f1 requires 0 <= z < 1, got z={z}, 1-z={one_minus_z}")
    if _nonpos_int(c):
        raise PoleError(f"2F1 lower parameter at a pole: c = {c}")
    if _exact_nonpos_int(a) or _exact_nonpos_int(b):
        n = int(-min(a.real, b.real)) if _exact_nonpos_int(a) and _exact_nonpos_int(b) \
            else int(-a.real) if _exact_nonpos_int(a) else int(-b.real)
        term = 1.0 + 0.0j
        total = 1.0 + 0.0j
        for k in range(n):
            term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
            total += term
        return total
    if z <= Z_SWITCH:
        return _gauss_series(a, b, c, z)
    s = c - a - b
    sr = s.real - round(s.real)
    if abs(complex(sr, s.imag)) < 1e-8:
        raise DegenerateParameterError(
            f"c-a-b = {s} is within 1e-8 of an integer; connection formula degenerate"
        )
    w = one_minus_z
    pre1 = cmath.exp(log_gamma(c) + log_gamma(s) - log_gamma(c - a) - log_gamma(c - b))
    pre2 = cmath.exp(
        log_gamma(c) + log_gamma(-s) - log_gamma(a) - log_gamma(b) + s * math.log(w)
    )
    return pre1 * _gauss_series(a, b, 1.0 - s, w) + pre2 * _gauss_series(
        c - a, c - b, 1.0 + s, w
    )


# Bernoulli numbers B_2, B_4, ..., B_10 for the Euler-Maclaurin tail.
_BERNOULLI = (1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0)


def _hurwitz_tail(z: complex, m: int) -> complex:
    """sum_{k=m}^inf k^(-z) for Re(z) > 1 and large m, by Euler-Maclaurin."""
    mz = cmath.exp(-z * math.log(m))
    total = mz * m / (z - 1.0) + 0.5 * mz
    fac = z
    mpow = mz / m
    for j, bern in enumerate(_BERNOULLI, start=1):
        total += bern / math.factorial(2 * j) * fac * mpow
        fac *= (z + 2 * j - 1) * (z + 2 * j)
        mpow /= float(m) * m
    return total


_TAIL_DEGREE = 8
_ACCEL_REL_TOL = 1e-8


def _hyp3f2_accelerated(a1, a2, a3, b1, b2, s: complex):
    """(value, absolute error estimate) for a non-terminating 3F2(1).

    Head: direct float summation of N terms.  Tail: the scaled term
    t(k) k^(1+s) is analytic in 1/k, so a Chebyshev polynomial fit in
    w = N/k (terms evaluated through log_gamma at k >= N) turns the tail
    into a short combination of Hurwitz-zeta tails.
    """
    pmax = max(abs(v) for v in (a1, a2, a3, b1, b2))
    n_head = int(max(400, 25.0 * pmax))
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    mx = 1.0
    for k in range(n_head):
        term *= (a1 + k) * (a2 + k) * (a3 + k) / ((b1 + k) * (b2 + k) * (k + 1.0))
        total += term
        mx = max(mx, abs(term))
    base = (
        log_gamma(b1) + log_gamma(b2) - log_gamma(a1) - log_gamma(a2) - log_gamma(a3)
    )

    def term_at(k: float) -> complex:
        return cmath.exp(
            base
            + log_gamma(a1 + k)
            + log_gamma(a2 + k)
            + log_gamma(a3 + k)
            - log_gamma(b1 + k)
            - log_gamma(b2 + k)
            - log_gamma(k + 1.0)
        )

    deg = _TAIL_DEGREE
    j = np.arange(deg + 1)
    w = 0.5 * (1.0 + np.cos(math.pi * (2 * j + 1) / (2 * (deg + 1))))
    h = np.array(
        [term_at(n_head / wi) * cmath.exp((1.0 + s) * math.log(n_head / wi)) for wi in w]
    )
    coef = np.polynomial.polynomial.polyfit(w, h, deg)
    tail = sum(
        coef[m] * (float(n_head) ** m) * _hurwitz_tail(1.0 + s + m, n_head + 1)
        for m in range(deg + 1)
    )
    est = 1e-15 * mx + abs(coef[deg]) * (float(n_head) ** deg) * abs(
        _hurwitz_tail(1.0 + s.real + deg, n_head + 1)
    )
    return total + tail, est


def hyp3f2_unit(a1: complex, a2: complex, a3: complex, b1: complex, b2: complex) -> complex:
    """3F2(a1, a2, a3; b1, b2; 1).

    Terminating series are summed directly.  Non-terminating series require
    Re(b1+b2-a1-a2-a3) > 0; the algebraic tail k^(-1-s) defeats plain float64
    summation for the small abscissae s that occur on the spectral bands, so
    the tail is resummed through Hurwitz zeta values, with an mpmath fallback
    whenever the self-estimated error of that resummation is too large.

    Results are memoized: series expansions in this package re-request the
    same parameter tuples many times, and the fallback path is expensive.
    """
    return _hyp3f2_unit_cached(
        complex(a1), complex(a2), complex(a3), complex(b1), complex(b2)
    )


@functools.lru_cache(maxsize=65536)
def _hyp3f2_unit_cached(a1, a2, a3, b1, b2) -> complex:
    for b in (b1, b2):
        if _nonpos_int(b):
            raise PoleError(f"3F2 lower parameter at a pole: {b}")
    terminating = [v for v in (a1, a2, a3) if _exact_nonpos_int(v)]
    if terminating:
        n = int(-max(v.real for v in terminating))
        term = 1.0 + 0.0j
        total = 1.0 + 0.0j
        for k in range(n):
            term *= (a1 + k) * (a2 + k) * (a3 + k) / ((b1 + k) * (b2 + k) * (k + 1))
            total += term
        return total
    s = b1 + b2 - a1 - a2 - a3
    if s.real <= 0.0:
        raise ConvergenceError(
            f"3F2(1) diverges: Re(b1+b2-a1-a2-a3) = {s.real:.3g} <= 0"
        )
    if s.real < 0.1:
        warnings.warn(
            f"3F2(1) convergence abscissa {s.real:.3g} < 0.1; result may lose accuracy",
            SlowConvergenceWarning,
            stacklevel=2,
        )
    value, est = _hyp3f2_accelerated(a1, a2, a3, b1, b2, s)
    if est <= _ACCEL_REL_TOL * abs(value):
        return value
    with mpmath.workdps(40):
        return complex(mpmath.hyp3f2(a1, a2, a3, b1, b2, 1))
