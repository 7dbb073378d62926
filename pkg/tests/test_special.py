import math

import mpmath
import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.special import hyp2f1 as scipy_hyp2f1

from hyptrans.special import (
    ConvergenceError,
    DegenerateParameterError,
    PoleError,
    gamma_product,
    hyp2f1,
    hyp3f2_unit,
    log_gamma,
    pochhammer,
)


def test_log_gamma_matches_lgamma_on_positive_reals():
    for x in (0.1, 0.5, 1.0, 2.5, 10.0, 120.5):
        assert_allclose(log_gamma(x).real, math.lgamma(x), rtol=1e-13, atol=1e-13)
        assert abs(log_gamma(x).imag) < 1e-13


def test_log_gamma_complex_against_mpmath():
    rng = np.random.default_rng(3)
    for _ in range(30):
        z = complex(rng.uniform(-5, 8), rng.uniform(-8, 8))
        if abs(z.imag) < 0.1 and z.real < 0.5:
            continue
        ref = complex(mpmath.loggamma(z))
        assert_allclose(log_gamma(z).real, ref.real, rtol=1e-11, atol=1e-12)
        assert_allclose(log_gamma(z).imag, ref.imag, rtol=1e-11, atol=1e-12)


def test_log_gamma_pole():
    with pytest.raises(PoleError):
        log_gamma(0.0)
    with pytest.raises(PoleError):
        log_gamma(-3.0)


def test_gamma_product_and_pochhammer():
    assert_allclose(gamma_product([1.0, 2.0, 4.0]).real, 6.0, rtol=1e-13)
    assert_allclose(pochhammer(3.0, 4).real, 3 * 4 * 5 * 6, rtol=1e-14)
    assert pochhammer(2.5 + 1j, 0) == 1.0


def test_hyp2f1_matches_scipy_real_params():
    rng = np.random.default_rng(5)
    for _ in range(50):
        a, b, c = rng.uniform(-2, 3, size=3)
        if abs(c - round(c)) < 0.05 and c < 0.5:
            continue
        s = c - a - b
        if abs(s - round(s)) < 1e-6:
            continue
        z = rng.uniform(0.0, 0.98)
        assert_allclose(
            hyp2f1(a, b, c, z).real, scipy_hyp2f1(a, b, c, z), rtol=1e-10, atol=1e-12
        )


def test_hyp2f1_complex_params_against_mpmath():
    a, b, c = 0.4 + 1.3j, 0.6 - 1.3j, 1.0 + 0.8j
    for z in (0.2, 0.5, 0.9, 0.99):
        ref = complex(mpmath.hyp2f1(a, b, c, z))
        assert_allclose(complex(hyp2f1(a, b, c, z)), ref, rtol=1e-10)


def test_hyp2f1_terminating():
    # 2F1(-2, b; c; z) is a quadratic polynomial
    a, b, c = -2.0, 1.7, 0.9
    for z in (0.3, 0.95):
        expect = 1 + a * b / c * z + a * (a + 1) * b * (b + 1) / (c * (c + 1) * 2) * z**2
        assert_allclose(hyp2f1(a, b, c, z).real, expect, rtol=1e-14)


def test_hyp2f1_one_minus_z_path():
    # z indistinguishable from 1 in float; the stable 1-z form keeps it finite
    a, b, c = 0.3 + 0.9j, 0.3 - 0.9j, 1.2
    um = 1e-20
    value = hyp2f1(a, b, c, 1.0, one_minus_z=um)
    assert np.isfinite(value.real) and np.isfinite(value.imag)


def test_hyp2f1_errors():
    with pytest.raises(PoleError):
        hyp2f1(0.5, 0.5, -1.0, 0.3)
    with pytest.raises(ValueError):
        hyp2f1(0.5, 0.5, 1.0, 1.5)
    with pytest.raises(DegenerateParameterError):
        hyp2f1(0.5, 0.5, 2.0, 0.9)  # c-a-b = 1 exactly


def test_hyp3f2_terminating():
    # Pfaff-Saalschutz: 3F2(-n, a, b; c, 1+a+b-c-n; 1)
    n, a, b, c = 3, 0.7, 1.3, 2.1
    d = 1 + a + b - c - n
    got = hyp3f2_unit(float(-n), a, b, c, d)
    expect = (
        pochhammer(c - a, n) * pochhammer(c - b, n)
        / (pochhammer(c, n) * pochhammer(c - a - b, n))
    )
    assert_allclose(got.real, expect.real, rtol=1e-12)


def test_hyp3f2_nonterminating_against_mpmath():
    args = (0.55 + 1.1j, 0.45 - 1.1j, 0.9 + 0.7j, 1.0 + 1.4j, 2.05 - 0.3j)
    with mpmath.workdps(40):
        ref = complex(mpmath.hyp3f2(*args, 1))
    assert_allclose(complex(hyp3f2_unit(*args)), ref, rtol=1e-9)


def test_hyp3f2_large_imaginary_parameters():
    # exercises the mpmath fallback triggered by the tail error estimate
    d = 11.5j
    e = 1j * math.sqrt(11.5**2 + 1.8**2 - 1.3**2)
    args = (0.5 * (1 + d + e + 2.5), 0.5 * (1 + d + e - 2.5), 0.5 * (1.8 + e), 1 + e, 0.5 * (3.1 + e + d))
    with mpmath.workdps(40):
        ref = complex(mpmath.hyp3f2(*args, 1))
    assert_allclose(complex(hyp3f2_unit(*args)), ref, rtol=1e-8)


def test_hyp3f2_divergent_raises():
    with pytest.raises(ConvergenceError):
        hyp3f2_unit(2.0, 2.0, 2.0, 1.5, 1.5)
