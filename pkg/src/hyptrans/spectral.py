"""Spectral geometry of the operator: parameter maps, regions, weights.

The real line splits into the multiplicity-two band Omega2 below -(beta+1)^2,
the multiplicity-one band Omega1 between the band endpoints, a finite set of
discrete eigenvalues, and the generic (resolvent) region above -(alpha+1)^2.
"""

from __future__ import annotations

import cmath
import enum
import math
import warnings
from dataclasses import dataclass, field

from .special import PoleError, _nonpos_int, log_gamma

__all__ = [
    "Region",
    "ModelParams",
    "SpectralPoint",
    "EndpointError",
    "RegionError",
    "classify",
    "spectral_parameters",
    "discrete_spectrum",
    "c_func",
    "weight_v",
    "weight_V",
    "discrete_weight_N",
]


class EndpointError(ValueError):
    """Eigenvalue sits on a band endpoint, which is excluded everywhere."""


class RegionError(ValueError):
    """A spectral point was passed to an operation for a different region."""


class Region(enum.Enum):
    OMEGA2 = "omega2"
    OMEGA1 = "omega1"
    DISCRETE = "discrete"
    GENERIC = "generic"


@dataclass(frozen=True)
class ModelParams:
    """The model triple (alpha, beta, kappa) and its derived constants."""

    alpha: float
    beta: float
    kappa: complex

    def __post_init__(self):
        if not (self.alpha > -1.0 and self.beta > -1.0):
            raise ValueError("alpha and beta must both exceed -1")
        if self.beta < self.alpha:
            raise ValueError("beta >= alpha is required (swap via x -> -x otherwise)")
        k = complex(self.kappa)
        real_ok = k.imag == 0.0 and k.real >= 0.0
        imag_ok = k.real == 0.0 and k.imag > 0.0
        if not (real_ok or imag_ok):
            raise ValueError("kappa must lie in [0, inf) or on the positive imaginary axis")

    @property
    def C(self) -> float:
        """Prefactor of p(x) and of the normalized Jacobi weight."""
        a, b = self.alpha, self.beta
        return 2.0 ** (-a - b - 1.0) * math.exp(
            math.lgamma(a + b + 2.0) - math.lgamma(a + 1.0) - math.lgamma(b + 1.0)
        )

    @property
    def D(self) -> float:
        """Normalization of the spectral-side inner product; equals 2^(a+b+3) C."""
        a, b = self.alpha, self.beta
        return 4.0 * math.exp(
            math.lgamma(a + b + 2.0) - math.lgamma(a + 1.0) - math.lgamma(b + 1.0)
        )

    @property
    def K(self) -> float:
        a, b = self.alpha, self.beta
        return 4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0) * (a + b + 3.0))

    @property
    def rho(self) -> float:
        k2 = complex(self.kappa) ** 2
        return 0.25 * (k2.real - (self.alpha + self.beta + 3.0) ** 2)

    @property
    def omega1_endpoint(self) -> float:
        """Upper edge of the continuous spectrum, -(alpha+1)^2."""
        return -((self.alpha + 1.0) ** 2)

    @property
    def omega2_endpoint(self) -> float:
        """Boundary between the two continuous bands, -(beta+1)^2."""
        return -((self.beta + 1.0) ** 2)


@dataclass(frozen=True)
class SpectralPoint:
    """An eigenvalue with its region tag and resolved parameters (delta, eta)."""

    lam: complex
    region: Region
    delta: complex
    eta: complex
    n: int | None = None  # index within the discrete spectrum

    def __post_init__(self):
        if self.region is Region.DISCRETE and self.n is None:
            raise ValueError("discrete spectral points need their index n")


def spectral_parameters(lam: complex, params: ModelParams) -> tuple[complex, complex]:
    """Principal-branch (delta, eta) for arbitrary complex lam off the bands."""
    lam = complex(lam)
    delta = cmath.sqrt(lam + (params.alpha + 1.0) ** 2)
    eta = cmath.sqrt(lam + (params.beta + 1.0) ** 2)
    return delta, eta


_ENDPOINT_TOL = 1e-12


def classify(lam: float, params: ModelParams) -> SpectralPoint:
    """Resolve a real eigenvalue into its region with (delta, eta) attached."""
    lam = float(lam)
    e1 = params.omega1_endpoint
    e2 = params.omega2_endpoint
    if abs(lam - e1) <= _ENDPOINT_TOL or abs(lam - e2) <= _ENDPOINT_TOL:
        raise EndpointError(f"lambda = {lam} lies on a band endpoint")
    if lam < e2:
        delta = 1j * math.sqrt(-lam - (params.alpha + 1.0) ** 2)
        eta = 1j * math.sqrt(-lam - (params.beta + 1.0) ** 2)
        return SpectralPoint(lam, Region.OMEGA2, delta, eta)
    if lam < e1:
        delta = 1j * math.sqrt(-lam - (params.alpha + 1.0) ** 2)
        eta = complex(math.sqrt(lam + (params.beta + 1.0) ** 2))
        return SpectralPoint(lam, Region.OMEGA1, delta, eta)
    delta = complex(math.sqrt(lam + (params.alpha + 1.0) ** 2))
    eta = complex(math.sqrt(lam + (params.beta + 1.0) ** 2))
    return SpectralPoint(lam, Region.GENERIC, delta, eta)


def _lambda_n_closed_form(n: int, params: ModelParams) -> tuple[float, float]:
    """Both displayed closed forms for the n-th discrete eigenvalue."""
    a, b = params.alpha, params.beta
    k = complex(params.kappa).real
    shift = (a - b) * (a + b + 2.0) / (-4.0 * n - 2.0 + 2.0 * k)
    base = -n + 0.5 * (k - 1.0)
    lam_a = (base + shift) ** 2 - (a + 1.0) ** 2
    lam_b = (base - shift) ** 2 - (b + 1.0) ** 2
    return lam_a, lam_b


def discrete_spectrum(params: ModelParams) -> list[SpectralPoint]:
    """All discrete eigenvalues lambda_n, n <= (kappa-1)/2, polished by Newton.

    Empty for kappa < 1 or kappa on the imaginary axis.  A boundary index with
    kappa an odd integer can force delta(lambda_n) = 0 (alpha = beta); its
    weight degenerates to zero and the point is dropped with a warning.
    """
    k = complex(params.kappa)
    if k.imag != 0.0 or k.real < 1.0:
        return []
    k = k.real
    a1sq = (params.alpha + 1.0) ** 2
    b1sq = (params.beta + 1.0) ** 2
    points: list[SpectralPoint] = []
    n_max = int(math.floor(0.5 * (k - 1.0) + 1e-12))
    for n in range(n_max + 1):
        target = k - 2.0 * n - 1.0
        if target < 1e-10:
            # kappa an odd integer: the solution collapses onto the band
            # endpoint -(alpha+1)^2 (alpha=beta) where the discrete weight
            # vanishes; the endpoint belongs to the continuous spectrum.
            warnings.warn(
                f"dropping boundary discrete index n={n}: delta(lambda_n) -> 0",
                stacklevel=2,
            )
            continue
        lam_a, lam_b = _lambda_n_closed_form(n, params)
        if abs(lam_a - lam_b) > 1e-11 * max(1.0, abs(lam_a)):
            raise ArithmeticError(
                f"closed forms for lambda_{n} disagree: {lam_a} vs {lam_b}"
            )
        lam = lam_a
        # Newton polish on sqrt(lam+(a+1)^2) + sqrt(lam+(b+1)^2) = kappa-2n-1;
        # the closed form loses digits when the right-hand side is small.
        for _ in range(50):
            da = lam + a1sq
            db = lam + b1sq
            if da <= 0.0 or db <= 0.0:
                break
            sd, se = math.sqrt(da), math.sqrt(db)
            f = sd + se - target
            if abs(f) < 1e-13:
                break
            lam -= f / (0.5 / sd + 0.5 / se)
        delta = complex(math.sqrt(lam + a1sq))
        eta = complex(math.sqrt(lam + b1sq))
        points.append(SpectralPoint(lam, Region.DISCRETE, delta, eta, n=n))
    return points


def c_func(x: complex, y: complex, params: ModelParams) -> complex:
    """The c-function Gamma(1+y) Gamma(-x) / Gamma((1+y-x+k)/2, (1+y-x-k)/2).

    Returns 0 when a denominator gamma sits at a pole; raises PoleError when
    the numerator does.
    """
    x, y = complex(x), complex(y)
    k = complex(params.kappa)
    if _nonpos_int(1.0 + y) or _nonpos_int(-x):
        raise PoleError(f"c-function numerator pole at x={x}, y={y}")
    d1 = 0.5 * (1.0 + y - x + k)
    d2 = 0.5 * (1.0 + y - x - k)
    if _nonpos_int(d1) or _nonpos_int(d2):
        return 0.0 + 0.0j
    return cmath.exp(log_gamma(1.0 + y) + log_gamma(-x) - log_gamma(d1) - log_gamma(d2))


def weight_v(point: SpectralPoint, params: ModelParams) -> float:
    """Scalar spectral density on Omega1: 1 / (c(delta; eta) c(-delta; eta))."""
    if point.region is not Region.OMEGA1:
        raise RegionError(f"weight_v needs an Omega1 point, got {point.region}")
    value = 1.0 / (
        c_func(point.delta, point.eta, params) * c_func(-point.delta, point.eta, params)
    )
    if abs(value.imag) > 1e-10 * max(1.0, abs(value.real)):
        raise ArithmeticError(f"weight v(lambda) not numerically real: {value}")
    return value.real


def weight_V(point: SpectralPoint, params: ModelParams):
    """Hermitian 2x2 matrix weight on Omega2 with unit diagonal."""
    import numpy as np

    if point.region is not Region.OMEGA2:
        raise RegionError(f"weight_V needs an Omega2 point, got {point.region}")
    v21 = c_func(point.eta, point.delta, params) / c_func(
        -point.eta, point.delta, params
    )
    return np.array([[1.0 + 0.0j, v21.conjugate()], [v21, 1.0 + 0.0j]])


def discrete_weight_N(point: SpectralPoint, params: ModelParams) -> float:
    """Closed-form discrete spectral weight N at the n-th eigenvalue."""
    if point.region is not Region.DISCRETE:
        raise RegionError(f"discrete_weight_N needs a discrete point, got {point.region}")
    n = point.n
    k = complex(params.kappa).real
    delta = point.delta.real
    eta = point.eta.real
    if delta < 1e-10:
        raise DegenerateDiscreteWeight(
            f"delta(lambda_{n}) = {delta} degenerates the discrete weight"
        )
    log_num = log_gamma(-eta) + log_gamma(k - n)
    log_den = (
        log_gamma(eta)
        + log_gamma(0.5 * (1.0 + delta - eta + k))
        + log_gamma(0.5 * (1.0 + delta - eta - k))
        + math.lgamma(n + 1.0)
    )
    value = (
        4.0 * delta / (-2.0 * n - 1.0 + k) * (-1.0) ** n * cmath.exp(log_num - log_den)
    )
    if abs(value.imag) > 1e-10 * max(1.0, abs(value.real)):
        raise ArithmeticError(f"discrete weight not numerically real: {value}")
    return value.real


class DegenerateDiscreteWeight(ArithmeticError):
    """delta(lambda_n) is numerically zero, so N degenerates."""
