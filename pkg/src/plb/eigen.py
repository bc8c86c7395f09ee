"""Radial inverse-power iteration for the first p-Laplacian eigenvalue.

The iteration is built on the explicit radial Poisson solution

    phi(rho) = int_rho^R theta^{(1-n)/(p-1)} (int_0^theta s^{n-1} w ds)^{1/(p-1)} dtheta,

which solves -(r^{n-1}|phi'|^{p-2}phi')' = r^{n-1} w with phi(R) = 0.  Both
cumulative integrals use a per-cell power-law product rule (fit c*s^q through
the cell endpoints and integrate exactly), which is exact for pure power
integrands and therefore reproduces the closed-form solutions for
w = s^{-delta} to rounding accuracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .errors import ConvergenceError, DomainError, NumericError
from .params import ProblemParams

# Exponent window where the power-law antiderivative degenerates to a log.
_LOG_EXPONENT_TOL = 1e-9


@dataclass(frozen=True)
class RadialGrid:
    """Nodal values of a radial profile on [0, R]."""

    nodes: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)
        if nodes.ndim != 1 or nodes.shape != values.shape:
            raise DomainError("RadialGrid requires matching 1-d nodes and values")
        if len(nodes) < 257:
            raise DomainError(f"RadialGrid requires N >= 256 cells, got {len(nodes) - 1}")
        if nodes[0] != 0.0 or not np.all(np.diff(nodes) > 0.0):
            raise DomainError("RadialGrid nodes must start at 0 and increase strictly")


@dataclass(frozen=True)
class EigenResult:
    """Converged eigenvalue estimate with its radial profile."""

    lambda_: float
    iterations: int
    residual: float
    profile: RadialGrid


def uniform_grid(params: ProblemParams, grid_n: int) -> np.ndarray:
    if grid_n < 256:
        raise DomainError(f"grid_n must be >= 256, got {grid_n}")
    return np.linspace(0.0, params.R, grid_n + 1)


def _cell_integral(x1: float, x2: float, g1: float, g2: float) -> float:
    """Integral over [x1, x2] of the power-law fit through the endpoints.

    Falls back to the trapezoid rule when a power fit is unavailable
    (non-positive values or a zero left node).
    """
    if g1 <= 0.0 or g2 <= 0.0 or x1 <= 0.0:
        return 0.5 * (g1 + g2) * (x2 - x1)
    q = math.log(g2 / g1) / math.log(x2 / x1)
    if abs(q + 1.0) < _LOG_EXPONENT_TOL:
        return g1 * x1 * math.log(x2 / x1)
    # c = g1 / x1^q; integrate c x^q.
    return g1 * x1 * (math.expm1((q + 1.0) * math.log(x2 / x1))) / (q + 1.0)


def _first_cell_integral(x1: float, x2: float, g1: float, g2: float) -> float:
    """Integral over [0, x1] using the power-law fit through (x1,g1),(x2,g2)."""
    if g1 <= 0.0 or g2 <= 0.0:
        return 0.5 * g1 * x1
    q = math.log(g2 / g1) / math.log(x2 / x1)
    if q <= -1.0 + _LOG_EXPONENT_TOL:
        # Not integrable as a power fit; the trapezoid value is the safe cap.
        return 0.5 * g1 * x1
    return g1 * x1 / (q + 1.0)


def _cumulative_from_zero(nodes: np.ndarray, g: np.ndarray) -> np.ndarray:
    """M_i = int_0^{nodes[i]} g, with g given at the nodes (g[0] unused)."""
    out = np.zeros_like(nodes)
    if len(nodes) >= 3:
        out[1] = _first_cell_integral(nodes[1], nodes[2], g[1], g[2])
    for i in range(1, len(nodes) - 1):
        out[i + 1] = out[i] + _cell_integral(nodes[i], nodes[i + 1], g[i], g[i + 1])
    return out


def _integral_over_grid(nodes: np.ndarray, g: np.ndarray) -> float:
    return _cumulative_from_zero(nodes, g)[-1]


def lp_norm(profile: RadialGrid, params: ProblemParams) -> float:
    """sigma_n-weighted L^p norm of the radial profile."""
    nodes, values = profile.nodes, profile.values
    g = nodes ** (params.n - 1) * np.abs(values) ** params.p
    return (params.sigma_n * _integral_over_grid(nodes, g)) ** (1.0 / params.p)


def poisson_solve_radial(w: RadialGrid, params: ProblemParams) -> RadialGrid:
    """Solve -(r^{n-1}|phi'|^{p-2}phi')' = r^{n-1} w(r), phi(R) = 0."""
    p, n = params.p, params.n
    nodes, wv = w.nodes, w.values
    if np.any(wv < 0.0):
        raise DomainError("poisson_solve_radial requires w >= 0 on the grid")

    inner = _cumulative_from_zero(nodes, nodes ** (n - 1) * wv)
    if inner[-1] <= 0.0:
        if np.all(wv == 0.0):
            return RadialGrid(nodes, np.zeros_like(nodes))
        raise NumericError("inner integral of s^{n-1} w underflowed to zero")

    expo = (1.0 - n) / (p - 1.0)
    psi = np.zeros_like(nodes)
    psi[1:] = nodes[1:] ** expo * inner[1:] ** (1.0 / (p - 1.0))

    phi = np.zeros_like(nodes)
    for i in range(len(nodes) - 2, 0, -1):
        phi[i] = phi[i + 1] + _cell_integral(
            nodes[i], nodes[i + 1], psi[i], psi[i + 1]
        )
    phi[0] = phi[1] + _first_cell_integral(nodes[1], nodes[2], psi[1], psi[2])
    return RadialGrid(nodes, phi)


def inverse_power_iterate(
    params: ProblemParams,
    grid_n: int = 2048,
    tol: float = 1e-8,
    max_iter: int = 500,
) -> EigenResult:
    """First Dirichlet eigenvalue of the p-Laplacian on the ball B_R.

    Iterates u_{k+1} = poisson_solve_radial(u_hat^{p-1}) with u_hat the
    L^p-normalized previous iterate; the eigenvalue readout is
    lambda = ||u_{k+1}||_p^{1-p}.
    """
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    if max_iter < 10:
        raise DomainError(f"max_iter must be >= 10, got {max_iter}")
    p = params.p
    nodes = uniform_grid(params, grid_n)
    u = np.ones_like(nodes)
    u[-1] = 0.0
    lam = math.inf
    residual = math.inf
    for it in range(1, max_iter + 1):
        profile = RadialGrid(nodes, u)
        norm = lp_norm(profile, params)
        u_hat = u / norm
        nxt = poisson_solve_radial(RadialGrid(nodes, u_hat ** (p - 1.0)), params)
        nxt_norm = lp_norm(nxt, params)
        lam_next = nxt_norm ** (1.0 - p)
        residual = abs(lam_next - lam) / lam_next if math.isfinite(lam) else math.inf
        u = nxt.values
        lam = lam_next
        if residual < tol:
            return EigenResult(
                lambda_=lam,
                iterations=it,
                residual=residual,
                profile=RadialGrid(nodes, u / nxt_norm),
            )
    last = EigenResult(
        lambda_=lam,
        iterations=max_iter,
        residual=residual,
        profile=RadialGrid(nodes, u / lp_norm(RadialGrid(nodes, u), params)),
    )
    raise ConvergenceError(
        f"inverse_power_iterate: residual {residual:.3e} > tol {tol} "
        f"after {max_iter} iterations",
        result=last,
    )


def rayleigh_quotient(profile: RadialGrid, params: ProblemParams) -> float:
    """sigma_n-weighted radial Rayleigh quotient with centered differences."""
    p, n = params.p, params.n
    nodes, u = profile.nodes, profile.values
    du = np.gradient(u, nodes)
    num = _integral_over_grid(nodes, nodes ** (n - 1) * np.abs(du) ** p)
    den = _integral_over_grid(nodes, nodes ** (n - 1) * np.abs(u) ** p)
    if den < 1e-300:
        raise NumericError("rayleigh_quotient: profile has vanishing L^p norm")
    return num / den


def poisson_closed_form(
    delta: float, params: ProblemParams, nodes: Sequence[float]
) -> np.ndarray:
    """Exact Poisson solution for w = s^{-delta} (delta < min(p, n) or delta = p < n)."""
    p, n, R = params.p, params.n, params.R
    rho = np.asarray(nodes, dtype=float)
    if delta == p:
        if not p < n:
            raise DomainError("closed form at delta = p requires p < n")
        out = np.full_like(rho, math.inf)
        mask = rho > 0.0
        out[mask] = (n - p) ** (-1.0 / (p - 1.0)) * np.log(R / rho[mask])
        return out
    if not (delta < n):
        raise DomainError(f"closed form requires delta < n, got delta={delta}")
    e = (p - delta) / (p - 1.0)
    return (
        ((p - 1.0) / (p - delta))
        * (n - delta) ** (-1.0 / (p - 1.0))
        * (R ** e - rho ** e)
    )
