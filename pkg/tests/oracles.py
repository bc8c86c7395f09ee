"""Independent oracles for the test suite.

Everything here is computed by a different method than the package uses:
closed-form antiderivatives, scipy's log-gamma, a power-series bisection for
the Bessel zero, a dense grid minimization of the family kernel, and an ODE
shooting solve for a reference eigenvalue.  None of these call into plb's
numerical machinery.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq
from scipy.special import gammaln


def gamma_oracle(x: float) -> float:
    """Gamma via scipy's log-gamma (independent of the Lanczos code)."""
    return math.exp(gammaln(x))


def sphere_measure_oracle(n: int) -> float:
    return 2.0 * math.pi ** (n / 2.0) / gamma_oracle(n / 2.0)


def annulus_power_integral(p: float, n: int, R: float, r: float, k: float) -> float:
    """Closed form of sigma_n * int_r^R rho^{n-1} rho^{m-n} t(rho)^{pk-p} drho
    with t = (R^m - rho^m)/m, i.e. the u_k family's gradient-side integral
    divided by k^p.  Uses (n-1) + (m-1)p = m - 1 + (pk - p) * 0 identity:
    the integrand reduces to rho^{m-1} t^{pk-p}, whose antiderivative in t
    is exact.
    """
    m = (p - n) / (p - 1.0)
    q = p * k - p + 1.0
    t_r = (R ** m - r ** m) / m
    return sphere_measure_oracle(n) * t_r ** q / q


def annulus_log_integral(n: int, R: float, r: float, s: float) -> float:
    """Closed form of sigma_n * int_r^R rho^{-1} (ln(R/rho))^{ns-n} drho."""
    q = n * s - n + 1.0
    return sphere_measure_oracle(n) * math.log(R / r) ** q / q


def bessel_j0_squared_first_zero() -> float:
    """j_{0,1}^2 via bisection on the J0 power series on (2, 3)."""

    def j0(x: float) -> float:
        total = 0.0
        term = 1.0
        k = 0
        while abs(term) > 1e-18:
            total += term
            k += 1
            term *= -(x * x) / (4.0 * k * k)
        return total

    lo, hi = 2.0, 3.0
    assert j0(lo) > 0.0 > j0(hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if j0(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    return root * root


def family_kernel(r, p: float, n: int, delta: float):
    """Kernel G(r) of the one-parametric family inequality on the unit ball."""
    r = np.asarray(r, dtype=float)
    if delta < p:
        e = (p - delta) / (p - 1.0)
        c = (p - delta) / p
        return c ** (p - 1.0) * (
            c * r ** ((1.0 - delta) * p / (p - 1.0)) * (1.0 - r ** e) ** (-p)
            + (n - delta) * r ** (-delta) * (1.0 - r ** e) ** (1.0 - p)
        )
    if delta > p:
        e = (delta - p) / (p - 1.0)
        c = (delta - p) / p
        return c ** (p - 1.0) * (
            c * r ** (-p) * (1.0 - r ** e) ** (-p)
            + (n - delta) * r ** (-p) * (1.0 - r ** e) ** (1.0 - p)
        )
    c = (p - 1.0) / p
    L = np.log(1.0 / r)
    return c ** (p - 1.0) * (
        c * r ** (-p) * L ** (-p) + abs(n - p) * r ** (-p) * L ** (1.0 - p)
    )


def family_H_oracle(p: float, n: int, delta: float, grid: int = 20001) -> float:
    """inf over r of the family kernel, by dense grid search."""
    rs = np.linspace(1e-6, 1.0 - 1e-6, grid)
    return float(np.min(family_kernel(rs, p, n, delta)))


def family_sup_oracle(p: float, n: int, deltas: int = 2001, grid: int = 4001) -> float:
    """sup over delta of inf over r of the family kernel, dense grids."""
    rs = np.linspace(1e-6, 1.0 - 1e-6, grid)
    best = -math.inf
    for delta in np.linspace(1e-4, n - 1e-4, deltas):
        if abs(delta - p) < 1e-9:
            continue
        best = max(best, float(np.min(family_kernel(rs, p, n, delta))))
    return best


def eigenvalue_shooting(p: float, n: int, lam_lo: float, lam_hi: float) -> float:
    """First radial eigenvalue on the unit ball by ODE shooting.

    Integrates u' from the flux variable v = r^{n-1}|u'|^{p-2}u' and finds
    the lambda whose solution first vanishes exactly at r = 1.
    """

    def end_value(lam: float) -> float:
        def rhs(r, y):
            u, v = y
            if r == 0.0:
                return [0.0, 0.0]
            du = math.copysign(abs(v / r ** (n - 1)) ** (1.0 / (p - 1.0)), v)
            return [du, -lam * r ** (n - 1) * abs(u) ** (p - 2.0) * u]

        sol = solve_ivp(rhs, [1e-8, 1.0], [1.0, 0.0], rtol=1e-10, atol=1e-12)
        return sol.y[0, -1]

    return brentq(end_value, lam_lo, lam_hi, xtol=1e-7)
