"""Self-verification suites: every structural identity of the transform,
checked numerically with explicit tolerances.

Each check returns a CheckResult with the measured deviation; the CLI and the
acceptance tests render them as PASS/FAIL lines.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .eigenfunctions import (
    apply_T,
    bracket,
    generic_eigenfunctions,
    kernel_value,
    phi_discrete,
    phi_omega1,
    phi_pm_omega2,
)
from .jacobi import Phi_n, connection_coeffs, five_diag_coeffs, phi_n
from .mvop import f_phi_series, matrix_poly_eval, orthogonality_gram
from .quadrature import gauss_jacobi_rule, jacobi_rule
from .special import hyp2f1
from .spectral import (
    ModelParams,
    Region,
    c_func,
    classify,
    discrete_spectrum,
    discrete_weight_N,
    spectral_parameters,
)
from .transform import (
    SpectralGrid,
    build_grid,
    forward_transform,
    inner_product_V,
    inverse_transform,
)
from .wilson import diagonalization_residual, tridiag_coeffs

__all__ = ["CheckResult", "SUITES", "run_suite", "all_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float  # measured deviation
    tolerance: float
    passed: bool
    note: str = ""

    @staticmethod
    def from_value(name: str, value: float, tolerance: float, note: str = "") -> "CheckResult":
        return CheckResult(name, float(value), tolerance, bool(value < tolerance), note)

    @staticmethod
    def skipped(name: str, reason: str) -> "CheckResult":
        return CheckResult(name, 0.0, 0.0, True, note=f"skipped: {reason}")


_DEFAULT_PARAMS = ModelParams(0.3, 0.8, 2.5)


def check_c_function_identities(seed: int = 7) -> CheckResult:
    """Both reflection/quotient identities of the c-function at random points."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for kappa in (0.5, 2.5, 4.5):
        params = ModelParams(0.0, 0.0, kappa)
        pts = rng.normal(size=(200, 4))
        for xr, xi, yr, yi in pts:
            x = complex(2.0 * xr, 2.0 * xi + math.copysign(0.2, xi))
            y = complex(2.0 * yr, 2.0 * yi + math.copysign(0.2, yi))
            lhs = c_func(x, y, params)
            rhs = -(y / x) * c_func(-y, -x, params)
            worst = max(worst, abs(lhs - rhs) / max(1e-30, abs(lhs)))
            lhs2 = c_func(x, y, params) * c_func(-x, -y, params) - c_func(
                x, -y, params
            ) * c_func(-x, y, params)
            rhs2 = -y / x
            worst = max(worst, abs(lhs2 - rhs2) / max(1e-30, abs(rhs2)))
    return CheckResult.from_value("c-function identities", worst, 1e-10)


def _region_samples(params: ModelParams):
    """One spectral point per nonempty region, plus a generic eigenvalue."""
    pts = [classify(params.omega2_endpoint - 4.0, params)]
    if params.beta > params.alpha:
        mid = 0.5 * (params.omega1_endpoint + params.omega2_endpoint)
        pts.append(classify(mid, params))
    pts.extend(discrete_spectrum(params))
    return pts


def check_eigen_residuals() -> CheckResult:
    """T phi = lambda phi for every kernel family, all parameter sets."""
    worst = 0.0
    xs = (-0.5, 0.0, 0.5)
    for trip in ((0.0, 0.0, 0.5), (0.3, 0.8, 2.5), (0.0, 0.0, 4.5)):
        params = ModelParams(*trip)
        for pt in _region_samples(params):
            if pt.region is Region.OMEGA2:
                funcs = [
                    lambda t: phi_pm_omega2(pt, t, params)[0],
                    lambda t: phi_pm_omega2(pt, t, params)[1],
                ]
            elif pt.region is Region.OMEGA1:
                funcs = [lambda t: phi_omega1(pt, t, params)]
            else:
                funcs = [lambda t: phi_discrete(pt, t, params)]
            for f in funcs:
                # one scale per eigenfunction: kernels can vanish at single x
                scale = max(max(abs(f(x)) for x in xs) * abs(pt.lam), 1e-9)
                for x in xs:
                    res = abs(apply_T(f, x, params) - pt.lam * f(x))
                    worst = max(worst, res / scale)
    return CheckResult.from_value("eigenvalue equation residuals", worst, 1e-6)


def _generic_lambda(rng, params: ModelParams) -> float:
    """Generic eigenvalue above the continuous spectrum, away from kernel
    degeneracies (integer delta or eta)."""
    while True:
        lam = params.omega1_endpoint + 10.0 ** rng.uniform(-0.5, 1.0)
        d, e = spectral_parameters(lam, params)
        if min(abs(d.real - round(d.real)), abs(e.real - round(e.real))) > 0.05:
            return lam


def check_connection_formulas(seed: int = 11) -> CheckResult:
    """Three-term relations between the endpoint solution bases."""
    rng = np.random.default_rng(seed)
    params = _DEFAULT_PARAMS
    worst = 0.0
    for _ in range(20):
        lam = _generic_lambda(rng, params)
        x = rng.uniform(-0.8, 0.8)
        d, e = spectral_parameters(lam, params)
        fp, fm, qp, qm = generic_eigenfunctions(lam, x, params)
        for lhs, c1, c2 in (
            (qp, c_func(e, d, params), c_func(-e, d, params)),
            (qm, c_func(e, -d, params), c_func(-e, -d, params)),
        ):
            rhs = c1 * fp + c2 * fm
            worst = max(worst, abs(lhs - rhs) / max(1e-12, abs(lhs)))
        for lhs, c1, c2 in (
            (fp, c_func(d, e, params), c_func(-d, e, params)),
            (fm, c_func(d, -e, params), c_func(-d, -e, params)),
        ):
            rhs = c1 * qp + c2 * qm
            worst = max(worst, abs(lhs - rhs) / max(1e-12, abs(lhs)))
    return CheckResult.from_value("solution-basis connection formulas", worst, 1e-8)


def check_wronskian_constants() -> CheckResult:
    """The two bracket constants, checked to be constant across x."""
    params = _DEFAULT_PARAMS
    lam = 1.7
    d, e = spectral_parameters(lam, params)
    D = params.D
    worst = 0.0
    for x in (-0.8, -0.4, 0.0, 0.4, 0.8):
        w1 = bracket(
            lambda t: generic_eigenfunctions(lam, t, params)[1],
            lambda t: generic_eigenfunctions(lam, t, params)[0],
            x,
            params,
        )
        worst = max(worst, abs(w1 - (-e * D)) / abs(e * D))
        w2 = bracket(
            lambda t: generic_eigenfunctions(lam, t, params)[2],
            lambda t: generic_eigenfunctions(lam, t, params)[0],
            x,
            params,
        )
        target = -e * D * c_func(-e, d, params)
        worst = max(worst, abs(w2 - target) / abs(target))
    return CheckResult.from_value("Wronskian bracket constants", worst, 1e-7)


def check_discrete_orthogonality(params: ModelParams | None = None) -> CheckResult:
    """Closed-form orthogonality of the discrete-spectrum kernels."""
    if params is None:
        params = ModelParams(0.0, 0.0, 4.5)
    pts = discrete_spectrum(params)
    if not pts:
        return CheckResult.skipped("discrete-spectrum orthogonality", "no discrete spectrum")
    k = complex(params.kappa).real
    worst = 0.0
    for pm in pts:
        for pn in pts:
            dm, em = pm.delta.real, pm.eta.real
            dn, en = pn.delta.real, pn.eta.real
            # matched endpoint exponents make the integrand a polynomial
            rule = jacobi_rule(30, 0.5 * (dm + dn) - 1.0, 0.5 * (em + en) - 1.0)
            z = 0.5 * (1.0 + rule.nodes)
            fm = np.array([hyp2f1(float(-pm.n), k - pm.n, 1.0 + em, zi) for zi in z])
            fn = np.array([hyp2f1(float(-pn.n), k - pn.n, 1.0 + en, zi) for zi in z])
            got = np.sum(rule.weights * fm * fn).real
            if pm.n == pn.n:
                expect = 2.0 ** (k - pm.n - pn.n) / discrete_weight_N(pn, params)
                worst = max(worst, abs(got - expect) / abs(expect))
            else:
                worst = max(worst, abs(got))
    return CheckResult.from_value("discrete-spectrum orthogonality", worst, 1e-6)


def check_basis_connection() -> CheckResult:
    """phi_n expanded over the shifted orthonormal basis, pointwise."""
    worst = 0.0
    xs = np.array([-0.7, 0.0, 0.4])
    for trip in ((0.3, 0.8, 2.5), (0.0, 0.0, 4.5)):
        params = ModelParams(*trip)
        for n in range(11):
            an, bn, gn = connection_coeffs(n, params)
            rhs = an * Phi_n(n, xs, params)
            if n >= 1:
                rhs = rhs + bn * Phi_n(n - 1, xs, params)
            if n >= 2:
                rhs = rhs + gn * Phi_n(n - 2, xs, params)
            worst = max(worst, float(np.max(np.abs(phi_n(n, xs, params) - rhs))))
    return CheckResult.from_value("basis connection coefficients", worst, 1e-10)


def check_five_diagonal(params: ModelParams | None = None) -> CheckResult:
    """Gram matrix of the operator in the orthonormal basis vs the bands."""
    if params is None:
        params = _DEFAULT_PARAMS
    # modest rule size keeps the differentiation stencil inside (-1, 1)
    rule = gauss_jacobi_rule(20, params)
    nmax = 8
    worst = 0.0
    basis = np.array([phi_n(m, rule.nodes, params) for m in range(nmax + 3)])
    for n in range(nmax + 1):
        tv = np.array(
            [apply_T(lambda t: phi_n(n, t, params), x, params).real for x in rule.nodes]
        )
        an, bn, cn = five_diag_coeffs(n, params)
        expect = {
            n + 2: an,
            n + 1: bn,
            n: cn,
            n - 1: five_diag_coeffs(n - 1, params)[1],
            n - 2: five_diag_coeffs(n - 2, params)[0],
        }
        for m in range(nmax + 1):
            got = rule.integrate(tv * basis[m])
            worst = max(worst, abs(got - expect.get(m, 0.0)))
    return CheckResult.from_value("five-diagonal realization", worst, 1e-6)


def check_series_vs_quadrature(grid: SpectralGrid | None = None) -> CheckResult:
    """Closed series form of the basis transforms vs direct quadrature."""
    if grid is None:
        grid = build_grid(_DEFAULT_PARAMS, x_nodes=256)
    params = grid.params
    fields = [
        forward_transform(lambda x, n=n: phi_n(n, x, params), grid) for n in range(5)
    ]
    worst = 0.0
    count = 0
    for j in (5, 30, 60):
        pt = grid.omega2_points[j]
        for n in range(5):
            s = f_phi_series(n, pt.delta, pt.eta, params)
            worst = max(worst, abs(fields[n].omega2[j, 0] - s) / abs(s))
            count += 1
    for j in (10, 50, 90):
        if j >= len(grid.omega1_points):
            continue
        pt = grid.omega1_points[j]
        for n in range(5):
            s = f_phi_series(n, pt.delta, pt.eta, params)
            worst = max(worst, abs(fields[n].omega1[j] - s) / abs(s))
    for j, pt in enumerate(grid.discrete_points):
        for n in range(5):
            s = f_phi_series(n, pt.delta, pt.eta, params)
            worst = max(worst, abs(fields[n].discrete[j] - s) / abs(s))
    return CheckResult.from_value("transform series cross-validation", worst, 1e-8)


def check_parseval(grid: SpectralGrid | None = None) -> CheckResult:
    """Orthonormality of the transformed basis in the spectral inner product."""
    if grid is None:
        grid = build_grid(_DEFAULT_PARAMS, x_nodes=256)
    params = grid.params
    fields = [
        forward_transform(lambda x, n=n: phi_n(n, x, params), grid) for n in range(6)
    ]
    gram = np.array(
        [[inner_product_V(fields[m], fields[n], grid) for n in range(6)] for m in range(6)]
    )
    worst = float(np.max(np.abs(gram - np.eye(6))))
    return CheckResult.from_value("Parseval orthonormality", worst, 1e-4)


def check_round_trip(grid: SpectralGrid | None = None) -> CheckResult:
    """Inverse transform of a forward transform recovers the function."""
    if grid is None:
        grid = build_grid(_DEFAULT_PARAMS, x_nodes=256, truncation_s=16.0)
    worst = 0.0
    for f in (
        lambda x: np.ones_like(x),
        lambda x: x,
        lambda x: x**2 - 0.3 * x + 1.0,
        lambda x: x**4 - x**3,
    ):
        field = forward_transform(f, grid)
        for x in (-0.5, 0.0, 0.5):
            got = inverse_transform(field, grid, x)
            worst = max(worst, abs(got - f(np.array(x))))
    return CheckResult.from_value("inversion round trip", worst, 1e-5)


def check_matrix_orthogonality(grid: SpectralGrid | None = None) -> CheckResult:
    """Gram blocks of the matrix polynomials against the spectral weights."""
    if grid is None:
        grid = build_grid(_DEFAULT_PARAMS, x_nodes=256)
    worst = 0.0
    for m in range(4):
        for n in range(4):
            G = orthogonality_gram(m, n, grid)
            target = np.eye(2) if m == n else np.zeros((2, 2))
            worst = max(worst, float(np.linalg.norm(G - target)))
    return CheckResult.from_value("matrix-polynomial orthogonality", worst, 1e-3)


def check_wilson_reduction(params: ModelParams | None = None) -> CheckResult:
    """Equal-parameter tridiagonal reduction and Wilson diagonalization."""
    if params is None:
        params = ModelParams(0.0, 0.0, 0.5)
    if params.alpha != params.beta:
        return CheckResult.skipped("Wilson reduction", "requires alpha = beta")
    worst_band = 0.0
    for n in range(12):
        a5, b5, c5 = five_diag_coeffs(n, params)
        if b5 != 0.0:
            return CheckResult("Wilson reduction", abs(b5), 0.0, False, "b_n not exactly 0")
        at, ct = tridiag_coeffs(n, params)
        worst_band = max(worst_band, abs(a5 - at), abs(c5 - ct))
    if worst_band >= 1e-12:
        return CheckResult("Wilson reduction", worst_band, 1e-12, False, "band mismatch")
    res = diagonalization_residual(params, 4, (0.3, 1.0, 2.0))
    return CheckResult.from_value("Wilson reduction", res, 1e-7)


SUITES = {
    "identities": ("c_function", "connection_formulas", "wronskians", "basis_connection"),
    "eigen": ("eigen_residuals", "five_diagonal"),
    "parseval": ("discrete_orthogonality", "series_vs_quadrature", "parseval", "round_trip"),
    "mvop": ("matrix_orthogonality",),
    "wilson": ("wilson_reduction",),
}
SUITES["all"] = sum((SUITES[k] for k in ("identities", "eigen", "parseval", "mvop", "wilson")), ())


def run_suite(
    suite: str,
    params: ModelParams | None = None,
    grid_options: dict | None = None,
) -> list[CheckResult]:
    """Run a named suite; checks that need a grid share one per truncation."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    if params is None:
        params = _DEFAULT_PARAMS
    opts = {"x_nodes": 256}
    opts.update(grid_options or {})
    grids: dict[float, SpectralGrid] = {}

    def grid_for(truncation: float) -> SpectralGrid:
        if truncation not in grids:
            o = dict(opts)
            o["truncation_s"] = max(truncation, o.get("truncation_s", 0.0))
            grids[truncation] = build_grid(params, **o)
        return grids[truncation]

    results = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for name in SUITES[suite]:
            if name == "c_function":
                results.append(check_c_function_identities())
            elif name == "connection_formulas":
                results.append(check_connection_formulas())
            elif name == "wronskians":
                results.append(check_wronskian_constants())
            elif name == "basis_connection":
                results.append(check_basis_connection())
            elif name == "eigen_residuals":
                results.append(check_eigen_residuals())
            elif name == "five_diagonal":
                results.append(check_five_diagonal(params))
            elif name == "discrete_orthogonality":
                results.append(check_discrete_orthogonality())
            elif name == "series_vs_quadrature":
                results.append(check_series_vs_quadrature(grid_for(12.0)))
            elif name == "parseval":
                results.append(check_parseval(grid_for(12.0)))
            elif name == "round_trip":
                results.append(check_round_trip(grid_for(16.0)))
            elif name == "matrix_orthogonality":
                results.append(check_matrix_orthogonality(grid_for(12.0)))
            elif name == "wilson_reduction":
                results.append(check_wilson_reduction(params))
    return results


def all_checks(params: ModelParams | None = None) -> list[CheckResult]:
    return run_suite("all", params)
