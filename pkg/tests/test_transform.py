import numpy as np
import pytest
from numpy.testing import assert_allclose

from hyptrans.jacobi import phi_n
from hyptrans.mvop import f_phi_series
from hyptrans.transform import (
    build_grid,
    forward_transform,
    inner_product_V,
    inverse_transform,
)
from hyptrans.spectral import ModelParams


def test_grid_shapes(grid):
    n2 = len(grid.omega2_points)
    assert grid.omega2_E.shape == (n2, len(grid.x))
    assert grid.omega2_V.shape == (n2, 2, 2)
    assert len(grid.omega1_points) == len(grid.t_rule.nodes)
    assert len(grid.discrete_points) >= 1


def test_grid_validation(params):
    with pytest.raises(ValueError):
        build_grid(params, truncation_s=-1.0)


def test_single_band_empty_at_equal_parameters():
    g = build_grid(ModelParams(0.2, 0.2, 0.5), s_nodes=32, t_nodes=16, x_nodes=64)
    assert len(g.omega1_points) == 0


def test_forward_components_conjugate_for_real_input(grid):
    field = forward_transform(lambda x: x**2, grid)
    assert_allclose(field.omega2[:, 1], np.conj(field.omega2[:, 0]), rtol=1e-12)
    assert_allclose(field.omega1.imag, 0.0, atol=1e-12)


def test_forward_matches_series(grid):
    params = grid.params
    field = forward_transform(lambda x: phi_n(2, x, params), grid)
    pt = grid.omega2_points[10]
    expect = f_phi_series(2, pt.delta, pt.eta, params)
    assert_allclose(complex(field.omega2[10, 0]), complex(expect), rtol=1e-9)


def test_parseval_small(grid):
    params = grid.params
    fields = [forward_transform(lambda x, n=n: phi_n(n, x, params), grid) for n in range(3)]
    for m in range(3):
        for n in range(3):
            ip = inner_product_V(fields[m], fields[n], grid)
            assert abs(ip - (1.0 if m == n else 0.0)) < 1e-5


def test_round_trip(grid_wide):
    f = lambda x: x**3 - 0.5 * x + 0.2
    field = forward_transform(f, grid_wide)
    for x in (-0.4, 0.0, 0.55):
        got = inverse_transform(field, grid_wide, x)
        assert_allclose(got.real, f(x), atol=2e-6)
        assert abs(got.imag) < 2e-6


def test_truncation_tail_warning(params):
    import warnings as _w

    g = build_grid(params, s_nodes=60, t_nodes=30, x_nodes=128, truncation_s=3.0)
    field = forward_transform(lambda x: x, g)
    with _w.catch_warnings(record=True) as caught:
        _w.simplefilter("always")
        inverse_transform(field, g, 0.3)
    assert any("tail" in str(c.message) for c in caught)
