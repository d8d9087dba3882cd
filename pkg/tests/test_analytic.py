import math

import pytest

from pqzeta.analytic import (
    completed_zeta,
    completed_zeta_dirichlet,
    euler_product_check,
    primes_up_to,
    theta,
    weil_finite,
    zeta_dirichlet,
    zeta_from_lambda,
)


def test_theta_large_argument():
    assert abs(theta(60.0) - 1.0) < 1e-15


def test_theta_transformation_grid():
    x = 0.125
    while x <= 8.0 + 1e-9:
        assert abs(theta(1.0 / x) - math.sqrt(x) * theta(x)) < 1e-12
        x *= 1.25
    # the fixed point x = 1
    assert abs(theta(1.0) - 1.0 * theta(1.0)) == 0.0


def test_theta_half_vs_two():
    assert abs(theta(0.5) - math.sqrt(2.0) * theta(2.0)) < 1e-12


def test_lambda_symmetry_is_structural():
    for s in (0.25, 0.4, 0.75, 2.0, 3.0):
        assert abs(completed_zeta(s) - completed_zeta(1.0 - s)) < 1e-10


def test_lambda_at_two():
    assert abs(completed_zeta(2.0) - math.pi / 6.0) < 1e-10


def test_lambda_matches_dirichlet_oracle():
    for s in (2.0, 2.5, 3.0, 4.0):
        assert abs(completed_zeta(s) - completed_zeta_dirichlet(s)) < 1e-10


def test_lambda_pole_guard():
    with pytest.raises(ZeroDivisionError):
        completed_zeta(0.0)
    with pytest.raises(ZeroDivisionError):
        completed_zeta(1.0)


def test_zeta_dirichlet_known_values():
    assert abs(zeta_dirichlet(2.0) - math.pi**2 / 6.0) < 1e-12
    assert abs(zeta_dirichlet(4.0) - math.pi**4 / 90.0) < 1e-12


def test_trivial_zero_recovered():
    assert abs(zeta_from_lambda(-2.0 + 1e-6)) < 1e-5
    assert abs(zeta_from_lambda(-2.5)) > 1e-3
    assert abs(zeta_from_lambda(2.0) - math.pi**2 / 6.0) < 1e-9


def test_primes_up_to():
    assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert primes_up_to(1) == []


def test_euler_product_residuals():
    rep = euler_product_check(2.0, 10**4, 10**6)
    assert rep.residual < 1e-4 and rep.ok
    rep = euler_product_check(3.0, 10**4, 10**6)
    assert rep.residual < 1e-7 and rep.ok
    rep = euler_product_check(1.5, 10**4, 10**6)
    assert rep.ok


def test_euler_product_residual_decreases_with_cutoffs():
    small = euler_product_check(2.0, 10**3, 10**5)
    large = euler_product_check(2.0, 10**4, 10**6)
    assert large.residual < small.residual


def test_weil_single_term():
    p = 7
    f = lambda x: 1.0 if abs(x - p) < 1e-9 else 0.0
    assert abs(weil_finite(f, p, 10) - math.log(p) * p**-0.5) < 1e-15


def test_weil_symmetric_profile_doubles():
    p = 5
    g = lambda x: math.exp(-(math.log(x) ** 2))
    total = weil_finite(g, p, 40)
    one_sided = sum(
        p ** (-n / 2.0) * math.exp(-((n * math.log(p)) ** 2)) for n in range(1, 41)
    )
    assert abs(total - 2.0 * math.log(p) * one_sided) < 1e-14


def test_weil_tail_stability():
    g = lambda x: math.exp(-(math.log(x) ** 2))
    v1 = weil_finite(g, 2, 30)
    v2 = weil_finite(g, 2, 60)
    assert abs(v1 - v2) < 1e-14
