import math

import numpy as np
import pytest
from scipy import special

from diskvort import bessel_j0, bessel_j1, j1_zeros, modified_i0
from diskvort.quadrature import gauss_rule, integrate_radial

import oracles

# Frozen from the compensated power-series oracle (oracles.series_*), checked
# against mpmath to 17 digits.
J0_AT_1 = 0.7651976865579666
J1_AT_1 = 0.4400505857449335
I0_AT_1 = 1.2660658777520082
J0_AT_J1_ZERO = -0.4027593957025529

# Frozen from oracles.bisect_j1_zero at 1e-13.
FIRST_ZEROS = (3.8317059702074263, 7.015586669815681, 10.173468135062901)

SERIES_SWITCH = 12.0


def test_j0_examples():
    assert bessel_j0(0.0) == 1.0
    assert abs(bessel_j0(1.0) - J0_AT_1) < 1e-10
    assert abs(bessel_j0(3.8317059702) - J0_AT_J1_ZERO) < 1e-10


def test_j1_examples():
    assert bessel_j1(0.0) == 0.0
    assert abs(bessel_j1(1.0) - J1_AT_1) < 1e-10
    assert abs(bessel_j1(3.8317059702)) < 1e-10


def test_matches_series_oracle_below_switch():
    x = np.linspace(0.0, SERIES_SWITCH, 1201)
    j0_err = max(abs(bessel_j0(v) - oracles.series_j0(v)) for v in x)
    j1_err = max(abs(bessel_j1(v) - oracles.series_j1(v)) for v in x)
    assert j0_err < 1e-11
    assert j1_err < 1e-11


def test_accuracy_against_scipy_up_to_200():
    x = np.linspace(0.0, 200.0, 20011)
    assert np.max(np.abs(bessel_j0(x) - special.j0(x))) < 1e-10
    assert np.max(np.abs(bessel_j1(x) - special.j1(x))) < 1e-10


def test_crossover_continuity():
    below = np.nextafter(SERIES_SWITCH, 0.0)
    above = np.nextafter(SERIES_SWITCH, 100.0)
    assert abs(bessel_j0(below) - bessel_j0(above)) < 1e-10
    assert abs(bessel_j1(below) - bessel_j1(above)) < 1e-10


def test_derivative_identities_by_central_differences():
    rng = np.random.default_rng(20240817)
    x = rng.uniform(0.01, 30.0, size=100)
    h = 1e-5
    d_xj1 = ((x + h) * bessel_j1(x + h) - (x - h) * bessel_j1(x - h)) / (2 * h)
    assert np.max(np.abs(d_xj1 - x * bessel_j0(x))) < 1e-6
    d_j0 = (bessel_j0(x + h) - bessel_j0(x - h)) / (2 * h)
    assert np.max(np.abs(d_j0 + bessel_j1(x))) < 1e-6


def test_domain_errors():
    for fn in (bessel_j0, bessel_j1, modified_i0):
        with pytest.raises(ValueError):
            fn(-0.5)
        with pytest.raises(ValueError):
            fn(math.nan)
        with pytest.raises(ValueError):
            fn(math.inf)


def test_modified_i0_values():
    assert modified_i0(0.0) == 1.0
    assert abs(modified_i0(1.0) - I0_AT_1) < 1e-12
    assert abs(modified_i0(1.0) - oracles.series_i0(1.0)) < 1e-14


def test_modified_i0_exceeds_one_for_positive_arguments():
    x = np.linspace(1e-3, 100.0, 257)
    assert np.all(modified_i0(x) > 1.0)


def test_modified_i0_overflow_guard():
    with pytest.raises(OverflowError):
        modified_i0(100.5)


def test_first_three_zeros_match_bisection_oracle():
    table = j1_zeros(3)
    for got, expected in zip(table.zeros, FIRST_ZEROS):
        assert abs(got - expected) < 1e-9


def test_zero_count_zero_gives_empty_table():
    table = j1_zeros(0)
    assert len(table) == 0


def test_zero_table_invariants(zeros64):
    z = zeros64.zeros
    assert np.all(np.diff(z) > 0)
    assert np.max(np.abs(bessel_j1(z))) < 1e-10
    k = np.arange(1, 65)
    assert np.all(z > k * np.pi)
    assert np.all(z < (k + 1) * np.pi + 1.0)
    slope = np.abs(bessel_j0(z) - bessel_j1(z) / z)
    assert np.all(np.abs(bessel_j1(z)) < 10.0 * zeros64.tol * slope)


def test_zeros_kill_the_radial_mean(zeros8):
    rule = gauss_rule(16, 16)
    for j_k in zeros8.zeros:
        value = integrate_radial(lambda r: bessel_j0(j_k * r), rule)
        assert abs(value) < 1e-9


def test_zero_finder_preconditions():
    with pytest.raises(ValueError):
        j1_zeros(-1)
    with pytest.raises(ValueError):
        j1_zeros(3, tol=1e-15)


def test_vector_and_scalar_forms_agree():
    x = np.array([0.3, 5.0, 40.0])
    vec = bessel_j0(x)
    assert vec.shape == (3,)
    assert all(vec[i] == bessel_j0(float(x[i])) for i in range(3))
    assert isinstance(bessel_j1(2.0), float)
