import numpy as np
import pytest
from numpy.testing import assert_allclose

from hyptrans.spectral import (
    EndpointError,
    ModelParams,
    Region,
    c_func,
    classify,
    discrete_spectrum,
    discrete_weight_N,
    spectral_parameters,
    weight_V,
    weight_v,
)


def test_params_validation():
    with pytest.raises(ValueError):
        ModelParams(-1.5, 0.0, 1.0)
    with pytest.raises(ValueError):
        ModelParams(0.5, 0.2, 1.0)  # beta < alpha
    with pytest.raises(ValueError):
        ModelParams(0.0, 0.0, -1.0)
    ModelParams(0.0, 0.0, 2j)  # positive imaginary axis is admissible


def test_derived_constants(params):
    a, b = params.alpha, params.beta
    assert_allclose(params.D, 2.0 ** (a + b + 3) * params.C, rtol=1e-14)
    assert_allclose(params.K, 4 * (a + 1) * (b + 1) / ((a + b + 2) * (a + b + 3)), rtol=1e-14)
    k = complex(params.kappa)
    assert_allclose(params.rho, 0.25 * (k.real**2 - (a + b + 3) ** 2), rtol=1e-14)


def test_classify_regions(params):
    e1, e2 = params.omega1_endpoint, params.omega2_endpoint
    assert classify(e2 - 1.0, params).region is Region.OMEGA2
    assert classify(0.5 * (e1 + e2), params).region is Region.OMEGA1
    assert classify(e1 + 5.0, params).region is Region.GENERIC
    with pytest.raises(EndpointError):
        classify(e1, params)
    with pytest.raises(EndpointError):
        classify(e2, params)


def test_spectral_parameters_square_to_lambda(params):
    a1sq = (params.alpha + 1.0) ** 2
    b1sq = (params.beta + 1.0) ** 2
    # delta^2 = lam + (alpha+1)^2 on every branch (imaginary on the bands)
    for lam in (-8.0, -2.5, 1.3):
        d, e = spectral_parameters(lam, params)
        assert_allclose(complex(d * d), complex(lam + a1sq), atol=1e-12)
        assert_allclose(complex(e * e), complex(lam + b1sq), atol=1e-12)
    # purely imaginary with positive imaginary part on the bands
    d, e = spectral_parameters(params.omega2_endpoint - 2.0, params)
    assert d.real == 0.0 and d.imag > 0.0
    assert e.real == 0.0 and e.imag > 0.0


def test_discrete_spectrum_structure():
    # empty below kappa = 1
    assert discrete_spectrum(ModelParams(0.0, 0.0, 0.5)) == []
    pts = discrete_spectrum(ModelParams(0.0, 0.0, 4.5))
    assert [pt.n for pt in pts] == [0, 1]
    for pt in pts:
        # defining relation: delta + eta = kappa - 2n - 1
        assert_allclose(
            (pt.delta + pt.eta).real, 4.5 - 2 * pt.n - 1, atol=1e-10
        )
        assert pt.region is Region.DISCRETE
        assert discrete_weight_N(pt, ModelParams(0.0, 0.0, 4.5)) > 0.0


def test_discrete_spectrum_generic_params(params):
    for pt in discrete_spectrum(params):
        k = complex(params.kappa).real
        assert_allclose((pt.delta + pt.eta).real, k - 2 * pt.n - 1, atol=1e-10)


def test_c_function_reflection(params):
    rng = np.random.default_rng(11)
    for _ in range(20):
        x = complex(rng.normal(), rng.normal() + 0.3)
        y = complex(rng.normal(), rng.normal() + 0.3)
        lhs = c_func(x, y, params)
        rhs = -(y / x) * c_func(-y, -x, params)
        assert_allclose(complex(lhs), complex(rhs), rtol=1e-11)


def test_weight_v_positive(params):
    pt = classify(0.5 * (params.omega1_endpoint + params.omega2_endpoint), params)
    assert weight_v(pt, params) > 0.0


def test_weight_V_structure(params):
    pt = classify(params.omega2_endpoint - 3.0, params)
    V = weight_V(pt, params)
    assert V.shape == (2, 2)
    assert_allclose(V[0, 0], 1.0, atol=1e-13)
    assert_allclose(V[1, 1], 1.0, atol=1e-13)
    assert_allclose(V[0, 1], np.conj(V[1, 0]), atol=1e-13)
    # positive definite on the open band
    assert min(np.linalg.eigvalsh(V)) > 0.0
