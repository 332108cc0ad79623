import math

import numpy as np
import pytest

from diskvort import bessel_j0, bessel_j1
from diskvort.quadrature import default_rule, gauss_rule, integrate_radial, l2_disk_norm

# Frozen from the series oracle: J0(j_1)^2 / 2 and sqrt(pi) |J0(j_1)|.
J0_J1_SQ_HALF = 0.08110756541334287
SQRT_PI_J0_J1 = 0.7138724419013687


def plain_integral(f, rule):
    return float(np.dot(rule.weights, f(rule.nodes)))


def test_two_point_rule_is_exact_for_cubics():
    rule = gauss_rule(1, 2)
    assert abs(plain_integral(lambda x: x**3, rule) - 0.25) < 1e-15


def test_partition_of_unity():
    rule = gauss_rule(4, 8)
    assert abs(plain_integral(lambda x: np.ones_like(x), rule) - 1.0) < 1e-14


def test_radial_bessel_integral_vanishes_at_zero(zeros8):
    j3 = zeros8.zeros[2]
    rule = gauss_rule(8, 16)
    value = plain_integral(lambda r: r * bessel_j0(j3 * r), rule)
    assert abs(value) < 1e-10
    assert abs(value - bessel_j1(j3) / j3) < 1e-10


def test_rule_invariants():
    for panels, npp in ((1, 2), (4, 8), (32, 16)):
        rule = gauss_rule(panels, npp)
        assert abs(rule.weights.sum() - 1.0) < 1e-13
        assert rule.nodes[0] > 0.0 and rule.nodes[-1] < 1.0
        assert np.all(np.diff(rule.nodes) > 0)
        assert np.all(rule.weights > 0)
        # composite rules stay exact through the panel degree 2*npp - 1
        degree = 2 * npp - 1
        exact = 1.0 / (degree + 1)
        assert abs(plain_integral(lambda x: x**degree, rule) - exact) < 1e-12


def test_parameter_validation():
    with pytest.raises(ValueError):
        gauss_rule(0, 4)
    with pytest.raises(ValueError):
        gauss_rule(4, 1)
    with pytest.raises(ValueError):
        gauss_rule(4, 33)


def test_integrate_radial_examples(rule):
    assert abs(integrate_radial(lambda r: np.ones_like(r), rule) - 0.5) < 1e-14
    assert abs(integrate_radial(lambda r: 1.0 - 2.0 * r**2, rule)) < 1e-14


def test_integrate_radial_mode_normalization(zeros8, rule):
    j1 = zeros8.zeros[0]
    value = integrate_radial(lambda r: bessel_j0(j1 * r) ** 2, rule)
    assert abs(value - J0_J1_SQ_HALF) < 1e-10
    refined = integrate_radial(lambda r: bessel_j0(j1 * r) ** 2, gauss_rule(64, 16))
    assert abs(value - refined) < 1e-12


def test_rejects_non_finite_integrand(rule):
    with pytest.raises(ValueError):
        integrate_radial(lambda r: np.where(r > 0.5, np.inf, 1.0), rule)


def test_refinement_converges_at_second_order_or_better():
    f = lambda x: np.exp(x) * np.cos(3.0 * x)
    coarse = integrate_radial(f, gauss_rule(1, 2))
    mid = integrate_radial(f, gauss_rule(2, 2))
    fine = integrate_radial(f, gauss_rule(4, 2))
    assert abs(fine - mid) < abs(mid - coarse)
    assert abs(fine - mid) < 0.3 * abs(mid - coarse)


def test_linearity(rule):
    f = lambda r: np.sin(3.0 * r)
    g = lambda r: r**4
    lhs = integrate_radial(lambda r: 2.5 * f(r) - 1.25 * g(r), rule)
    rhs = 2.5 * integrate_radial(f, rule) - 1.25 * integrate_radial(g, rule)
    assert abs(lhs - rhs) < 1e-12


def test_default_rule_resolves_every_mode(zeros64, rule):
    basis = bessel_j0(np.outer(rule.nodes, zeros64.zeros))
    values = (rule.weights * rule.nodes) @ basis**2
    assert np.max(np.abs(values - bessel_j0(zeros64.zeros) ** 2 / 2.0)) < 1e-8


def test_l2_disk_norm_values(zeros8, rule):
    assert l2_disk_norm(lambda r: np.zeros_like(r), rule) == 0.0
    assert abs(l2_disk_norm(lambda r: np.ones_like(r), rule) - math.sqrt(math.pi)) < 1e-12
    j1 = zeros8.zeros[0]
    norm = l2_disk_norm(lambda r: bessel_j0(j1 * r), rule)
    assert abs(norm - SQRT_PI_J0_J1) < 1e-9
