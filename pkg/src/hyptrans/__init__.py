"""Hypergeometric spectral transform for a second-order differential operator
on (-1, 1): eigenfunction kernels, forward/inverse transform, five-diagonal
Jacobi-basis realization, 2x2 matrix-valued orthogonal polynomials, and the
equal-parameter Wilson specialization.
"""

from .eigenfunctions import (
    apply_T,
    bracket,
    generic_eigenfunctions,
    kernel_value,
    phi_discrete,
    phi_omega1,
    phi_pm_omega2,
)
from .jacobi import Phi_n, connection_coeffs, five_diag_coeffs, norm_h, phi_n
from .mvop import (
    f_phi_series,
    matrix_poly_eval,
    orthogonality_gram,
    recurrence_matrices,
    weight_W,
)
from .quadrature import QuadratureRule, gauss_jacobi_rule, jacobi_rule, legendre_rule
from .spectral import (
    ModelParams,
    Region,
    SpectralPoint,
    c_func,
    classify,
    discrete_spectrum,
    discrete_weight_N,
    spectral_parameters,
    weight_V,
    weight_v,
)
from .transform import (
    SpectralGrid,
    TransformField,
    build_grid,
    forward_transform,
    inner_product_V,
    inverse_transform,
)
from .verify import SUITES, CheckResult, all_checks, run_suite
from .wilson import (
    diagonalization_residual,
    tridiag_coeffs,
    wilson_even,
    wilson_odd,
    wilson_orthonormal,
)

__version__ = "0.1.0"
