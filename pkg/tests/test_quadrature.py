import math

import numpy as np
from numpy.testing import assert_allclose

from hyptrans.quadrature import gauss_jacobi_rule, jacobi_rule, legendre_rule


def test_jacobi_rule_total_mass():
    a, b = 0.3, 0.8
    rule = jacobi_rule(12, a, b)
    expect = math.exp(
        (a + b + 1) * math.log(2.0)
        + math.lgamma(a + 1)
        + math.lgamma(b + 1)
        - math.lgamma(a + b + 2)
    )
    assert_allclose(rule.integrate(np.ones_like(rule.nodes)).real, expect, rtol=1e-13)


def test_jacobi_rule_polynomial_exactness():
    a, b = 0.5, 1.5
    rule = jacobi_rule(10, a, b)
    # moments of the raw weight from the Beta function
    def moment(k):
        # int (1-x)^a (1+x)^b (1+x)^k dx = 2^(a+b+k+1) B(a+1, b+k+1)
        return math.exp(
            (a + b + k + 1) * math.log(2.0)
            + math.lgamma(a + 1)
            + math.lgamma(b + k + 1)
            - math.lgamma(a + b + k + 2)
        )

    for k in range(8):
        assert_allclose(
            rule.integrate((1.0 + rule.nodes) ** k).real, moment(k), rtol=1e-12
        )


def test_gauss_jacobi_unit_mass(params):
    rule = gauss_jacobi_rule(15, params)
    assert_allclose(rule.integrate(np.ones_like(rule.nodes)).real, 1.0, rtol=1e-13)


def test_legendre_rule_interval():
    rule = legendre_rule(20, 0.0, 3.0)
    assert_allclose(rule.integrate(rule.nodes**2).real, 9.0, rtol=1e-13)
    assert rule.nodes.min() > 0.0 and rule.nodes.max() < 3.0
