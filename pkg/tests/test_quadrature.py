import math

import pytest

from plb.errors import DivergenceError
from plb.params import sphere_measure
from plb.quadrature import RadialIntegrand, integrate_radial, tanh_sinh


def test_smooth_integral():
    value, err = tanh_sinh(lambda x, da, db: math.sin(x), 0.0, math.pi)
    assert value == pytest.approx(2.0, abs=1e-13)
    assert err < 1e-12


def test_inverse_square_root_endpoint():
    value, _ = tanh_sinh(lambda x, da, db: da ** -0.5, 0.0, 1.0)
    assert value == pytest.approx(2.0, abs=1e-12)


def test_log_singularity():
    value, _ = tanh_sinh(lambda x, da, db: math.log(da), 0.0, 1.0)
    assert value == pytest.approx(-1.0, abs=1e-12)


def test_both_endpoint_distances_accurate():
    # int_0^1 x^{-1/2} (1-x)^{-1/2} dx = pi.
    value, _ = tanh_sinh(lambda x, da, db: da ** -0.5 * db ** -0.5, 0.0, 1.0)
    assert value == pytest.approx(math.pi, abs=1e-11)


def test_radial_power_exact():
    # sigma_n int_0^R rho^{n-1} rho^alpha drho with alpha = -0.5, n = 3.
    f = RadialIntegrand(lambda rho, da, db: rho ** -0.5, -0.5, 0.0, 0.0, 2.0)
    value, _ = integrate_radial(f, 3)
    exact = sphere_measure(3) * 2.0 ** 2.5 / 2.5
    assert value == pytest.approx(exact, rel=1e-12)


def test_divergence_guard():
    f = RadialIntegrand(lambda rho, da, db: rho ** -3.0, -3.0, 0.0, 0.0, 1.0)
    with pytest.raises(DivergenceError):
        integrate_radial(f, 3)
    g = RadialIntegrand(lambda rho, da, db: db ** -1.0, 0.0, -1.0, 0.0, 1.0)
    with pytest.raises(DivergenceError):
        integrate_radial(g, 3)


def test_kink_split():
    # Piecewise profile with a kink at rho = 1: exact total known.
    def f(rho, da, db):
        return rho if rho < 1.0 else 2.0 - rho

    profile = RadialIntegrand(f, 0.0, 0.0, 0.0, 2.0)
    value, _ = integrate_radial(profile, 2, kinks=[1.0])
    # 2 pi [ int_0^1 rho^2 + int_1^2 rho(2 - rho) ] = 2 pi [1/3 + 2/3] = 2 pi.
    assert value == pytest.approx(2.0 * math.pi, rel=1e-12)


def test_empty_interval():
    assert tanh_sinh(lambda x, da, db: 1.0, 1.0, 1.0) == (0.0, 0.0)
