"""Acceptance gate: the twelve structural criteria, one PASS/FAIL line each.

Run with `pytest -v -s tests/test_acceptance.py` to see the report lines.
"""

import time
import warnings

import pytest

from hyptrans.spectral import ModelParams
from hyptrans.verify import (
    check_basis_connection,
    check_c_function_identities,
    check_connection_formulas,
    check_discrete_orthogonality,
    check_eigen_residuals,
    check_five_diagonal,
    check_matrix_orthogonality,
    check_parseval,
    check_round_trip,
    check_series_vs_quadrature,
    check_wilson_reduction,
    check_wronskian_constants,
)

warnings.simplefilter("ignore")


def _report(criterion: str, result, elapsed: float | None = None) -> None:
    status = "PASS" if result.passed else "FAIL"
    timing = f" [{elapsed:.1f}s]" if elapsed is not None else ""
    print(
        f"{status} criterion {criterion}: {result.name} — "
        f"value {result.value:.3e} vs tolerance {result.tolerance:g}{timing}"
    )
    assert result.passed, f"criterion {criterion} failed: {result}"


def test_criterion_01_c_function_identities():
    t0 = time.time()
    result = check_c_function_identities()
    elapsed = time.time() - t0
    _report("1", result, elapsed)
    assert elapsed < 1.0


def test_criterion_02_eigenfunction_residuals():
    t0 = time.time()
    result = check_eigen_residuals()
    elapsed = time.time() - t0
    _report("2", result, elapsed)
    assert elapsed < 10.0


def test_criterion_03_connection_formulas():
    _report("3", check_connection_formulas())


def test_criterion_04_wronskian_constants():
    _report("4", check_wronskian_constants())


def test_criterion_05_discrete_orthogonality():
    result = check_discrete_orthogonality(ModelParams(0.0, 0.0, 4.5))
    _report("5", result)
    assert not result.note  # must actually run, not skip


def test_criterion_06_connection_coefficients():
    _report("6", check_basis_connection())


def test_criterion_07_five_diagonal_realization():
    _report("7", check_five_diagonal())


def test_criterion_08_series_cross_validation(grid):
    _report("8", check_series_vs_quadrature(grid))


def test_criterion_09_parseval(grid):
    t0 = time.time()
    result = check_parseval(grid)
    elapsed = time.time() - t0
    _report("9", result, elapsed)
    assert elapsed < 120.0


def test_criterion_10_inversion_round_trip(grid_wide):
    _report("10", check_round_trip(grid_wide))


def test_criterion_11_matrix_orthogonality(grid):
    _report("11", check_matrix_orthogonality(grid))


def test_criterion_12_wilson_reduction():
    result = check_wilson_reduction(ModelParams(0.0, 0.0, 0.5))
    _report("12", result)
    assert not result.note
