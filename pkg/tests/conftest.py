import warnings

import pytest

from hyptrans import ModelParams, build_grid


@pytest.fixture(scope="session")
def params():
    return ModelParams(0.3, 0.8, 2.5)


@pytest.fixture(scope="session")
def grid(params):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return build_grid(params, x_nodes=256)


@pytest.fixture(scope="session")
def grid_wide(params):
    # wider double-band truncation for round-trip accuracy
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return build_grid(params, x_nodes=256, truncation_s=16.0)
