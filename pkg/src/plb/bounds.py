"""Analytical lower bounds for the first Dirichlet p-Laplacian eigenvalue on balls.

Implements every closed-form bound, the one-parametric family H(p, n, delta)
with its quadratic root machinery, the sup-over-delta optimizers, and the
Faber-Krahn reduction from a general domain volume to an equivalent ball.
All bound values scale like R^{-p}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, Optional, Tuple

from .errors import DomainError, NumericError
from .params import ProblemParams, ball_volume, derive, gamma_fn

BOUND_KINDS = (
    "hardy",
    "cheeger",
    "picone",
    "sobolev",
    "lindqvist",
    "double_singular",
    "log_improved",
    "family_point",
    "family_sup",
    "family_h2",
)


@dataclass(frozen=True)
class BoundResult:
    """A named lower bound value with validity flag and optimizer metadata."""

    kind: str
    value: float
    applicable: bool
    meta: Dict[str, object] = field(default_factory=dict)


@dataclass(frozen=True)
class FamilyEvaluation:
    """Coefficients, root and H value of the one-parametric family at one delta."""

    delta: float
    branch: str  # below_p | at_p | above_p | degenerate_A
    A: float = math.nan
    B: float = math.nan
    C: float = math.nan
    D: float = math.nan
    root: float = math.nan
    H: float = math.nan


def lambda_hardy(params: ProblemParams) -> BoundResult:
    """|(n-p)/(pR)|^p; not applicable at p = n."""
    p, n, R = params.p, params.n, params.R
    if p == n:
        return BoundResult("hardy", math.nan, False, {"reason": "p == n"})
    value = (abs(n - p) / (p * R)) ** p
    return BoundResult("hardy", value, True)


def lambda_cheeger(params: ProblemParams) -> BoundResult:
    """(n/(pR))^p from the Cheeger constant of the ball."""
    p, n, R = params.p, params.n, params.R
    return BoundResult("cheeger", (n / (p * R)) ** p, True)


def lambda_picone(params: ProblemParams) -> BoundResult:
    """Piecewise bound: n (p/(p-1))^{p-1} / R^p for 1<p<2, np/R^p for p>=2."""
    p, n, R = params.p, params.n, params.R
    if p < 2.0:
        value = n * (p / (p - 1.0)) ** (p - 1.0) / R ** p
        branch = "p_lt_2"
    else:
        value = n * p / R ** p
        branch = "p_ge_2"
    return BoundResult("picone", value, True, {"branch": branch})


def lambda_sobolev(params: ProblemParams) -> BoundResult:
    """Sobolev-constant bound, valid for 1 < p < n."""
    p, n, R = params.p, params.n, params.R
    if not (p < n):
        return BoundResult("sobolev", math.nan, False, {"reason": "requires p < n"})
    g = gamma_fn(n / 2.0) * gamma_fn(n + 1.0 - n / p) / gamma_fn(float(n))
    value = (
        (n / R ** p)
        * ((n - p) / (p - 1.0)) ** (p - 1.0)
        * g ** (p / n)
    )
    return BoundResult("sobolev", value, True)


def lambda_lindqvist(params: ProblemParams) -> BoundResult:
    """p/R^p, valid for p > n."""
    p, n, R = params.p, params.n, params.R
    if not (p > n):
        return BoundResult("lindqvist", math.nan, False, {"reason": "requires p > n"})
    return BoundResult("lindqvist", p / R ** p, True)


def lambda_double_singular(params: ProblemParams) -> BoundResult:
    """The double-singular-weight bound (the delta -> n family limit).

    (1/(pR))^p [(n-1)^{n-1}/(p-1)^{p-1}]^{p/(n-p)} for p != n and
    ((n-1)/(nR))^n e^n for p = n.
    """
    p, n, R = params.p, params.n, params.R
    if p == n:
        value = ((n - 1.0) / (n * R)) ** n * math.exp(float(n))
    else:
        log_bracket = (n - 1.0) * math.log(n - 1.0) - (p - 1.0) * math.log(p - 1.0)
        value = (1.0 / (p * R)) ** p * math.exp(log_bracket * p / (n - p))
    return BoundResult("double_singular", value, True)


def _log_improved_constants(p: float, n: int) -> Tuple[float, float, float]:
    """tau, y0, bracket used by the log-improved bound (p > n)."""
    m = (p - n) / (p - 1.0)
    s = math.sqrt((5.0 * p - 7.0) / (3.0 * (p - 1.0)))
    y0 = 2.0 / (1.0 + s)
    denom = p * (1.0 + s - 2.0 * math.log(m)) - 4.0 * m
    tau = 1.0 - 4.0 * (1.0 - m) / denom
    bracket = 1.0 + s - 2.0 * math.log(m) - 2.0 * math.log(tau)
    return tau, y0, bracket


def lambda_log_improved(params: ProblemParams) -> BoundResult:
    """Logarithmically improved double-singular bound, valid for p > n."""
    p, n = params.p, params.n
    if not (p > n):
        return BoundResult("log_improved", math.nan, False, {"reason": "requires p > n"})
    base = lambda_double_singular(params).value
    tau, y0, bracket = _log_improved_constants(p, n)
    multiplier = 1.0 + p / (4.0 * (p - 1.0)) * bracket ** (-2.0)
    return BoundResult(
        "log_improved",
        base * multiplier,
        True,
        {"tau": tau, "y0": y0, "bracket": bracket, "base": base},
    )


_AT_P_TOL = 1e-12


def family_coefficients(params: ProblemParams, delta: float) -> FamilyEvaluation:
    """Quadratic coefficients (A, B, C, D) of the family at one delta.

    Uses the degenerate coefficients (A0, B0, C0, D0) on the delta = p branch.
    """
    p, n = params.p, params.n
    if not (0.0 < delta < n):
        raise DomainError(f"family_coefficients requires 0 < delta < n, got delta={delta}")
    if abs(delta - p) < _AT_P_TOL:
        A = -(p ** 2) * (n - p)
        B = p * (p - 1.0) * (n - p - 1.0)
        C = p * (p - 1.0)
        D = B * B - 4.0 * A * C
        return FamilyEvaluation(delta=delta, branch="at_p", A=A, B=B, C=C, D=D)
    A = (p - 1.0) * (p - delta - p * (n - delta))
    B = (p - 1.0) * (n - delta) * (p + delta) - (delta - 1.0) * (p - delta)
    C = -delta * (n - delta) * (p - 1.0)
    D = B * B - 4.0 * A * C
    if abs(A) < 1e-10 * (p - 1.0) * p * n:
        branch = "degenerate_A"
    elif delta < p:
        branch = "below_p"
    else:
        branch = "above_p"
    return FamilyEvaluation(delta=delta, branch=branch, A=A, B=B, C=C, D=D)


def family_root(ev: FamilyEvaluation) -> FamilyEvaluation:
    """Populate the selected root of the branch quadratic."""
    A, B, C, D = ev.A, ev.B, ev.C, ev.D
    if ev.branch == "at_p":
        if D < 0.0:
            raise NumericError(f"negative discriminant D0={D} on at_p branch")
        # z0_minus = (-B0 - sqrt(D0)) / (2 A0) in the stable form 2 C0 / (sqrt(D0) - B0).
        root = 2.0 * C / (math.sqrt(D) - B)
        if not (root > 0.0):
            raise NumericError(f"at_p root {root} is not positive")
        return replace(ev, root=root)
    if ev.branch == "degenerate_A":
        root = -C / B
        if not (root > 0.0):
            raise NumericError(f"degenerate_A root {root} is not positive")
        return replace(ev, root=root)
    if D < 0.0:
        raise NumericError(f"negative discriminant D={D} for delta={ev.delta}")
    sqrt_d = math.sqrt(D)
    if ev.branch == "below_p":
        root = (-B + sqrt_d) / (2.0 * A)
    else:  # above_p
        root = (-B + sqrt_d) / (2.0 * C)
    if not (0.0 < root < 1.0):
        raise NumericError(
            f"root {root} outside (0, 1) on branch {ev.branch} at delta={ev.delta}"
        )
    return replace(ev, root=root)


def family_H(params: ProblemParams, delta: float) -> FamilyEvaluation:
    """H(p, n, delta): the family bound value at one delta (for R = 1)."""
    p, n = params.p, params.n
    ev = family_root(family_coefficients(params, delta))
    if ev.branch == "at_p":
        z = ev.root
        ez = math.exp(-z)
        lead = (p - 1.0) / (p * ez * z)
        H = lead ** (p - 1.0) * (lead + (n - p) / ez)
    elif ev.branch in ("below_p", "degenerate_A"):
        z = ev.root
        lead = (p - delta) / (p * (1.0 - z) * z ** (delta / (p - delta)))
        H = lead ** (p - 1.0) * ((p - delta) * z / (p * (1.0 - z)) + n - delta)
    else:  # above_p
        y = ev.root
        lead = (delta - p) / (p * (1.0 - y) * y ** (p / (delta - p)))
        H = lead ** (p - 1.0) * ((delta - p) / (p * (1.0 - y)) + n - delta)
    if not (H > 0.0) or not math.isfinite(H):
        raise NumericError(f"H={H} invalid at delta={delta}")
    return replace(ev, H=H)


def golden_section_max(
    f: Callable[[float], float], a: float, b: float, tol: float
) -> Tuple[float, float]:
    """Maximize a unimodal scalar function on [a, b] to x-tolerance tol."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = b - invphi * (b - a)
    x2 = a + invphi * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + invphi * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - invphi * (b - a)
            f1 = f(x1)
    x = 0.5 * (a + b)
    return x, f(x)


_DELTA_EDGE = 1e-6


def lambda_family_sup(
    params: ProblemParams,
    grid_size: int = 256,
    refine_tol: float = 1e-10,
) -> BoundResult:
    """R^{-p} sup over delta of H(p, n, delta), over the closure of (0, n).

    Grid scan plus golden-section refinement; the endpoint limits
    (H -> n at delta -> 0 and H -> R^p Lambda^(3,0) at delta -> n) and the
    delta = p branch value are inserted as extra candidates.
    """
    if grid_size < 64:
        raise DomainError(f"lambda_family_sup requires grid_size >= 64, got {grid_size}")
    if not (refine_tol > 0.0):
        raise DomainError("lambda_family_sup requires refine_tol > 0")
    p, n, R = params.p, params.n, params.R

    def h_of(delta: float) -> float:
        return family_H(params, delta).H

    deltas = [
        _DELTA_EDGE + (n - 2.0 * _DELTA_EDGE) * i / (grid_size - 1.0)
        for i in range(grid_size)
    ]
    values = [h_of(d) for d in deltas]
    best_i = max(range(grid_size), key=values.__getitem__)
    lo = deltas[best_i - 1] if best_i > 0 else deltas[0]
    hi = deltas[best_i + 1] if best_i < grid_size - 1 else deltas[-1]
    delta_star, h_star = golden_section_max(h_of, lo, hi, refine_tol)

    candidates = [(delta_star, h_star, "interior")]
    candidates.append((0.0, float(n), "delta_to_0"))
    candidates.append(
        (float(n), R ** p * lambda_double_singular(params).value, "delta_to_n")
    )
    if 0.0 < p < n:
        candidates.append((p, h_of(p), "delta_eq_p"))
    delta_best, h_best, label = max(candidates, key=lambda c: c[1])
    return BoundResult(
        "family_sup",
        h_best / R ** p,
        True,
        {"delta_star": delta_best, "candidate": label, "H": h_best},
    )


def _h2_kernel(p: float, n: int, delta: float) -> float:
    """(n - delta) (p / delta)^{delta (p-1)/(p - delta)} for delta != p."""
    expo = delta * (p - 1.0) / (p - delta)
    return (n - delta) * math.exp(expo * math.log(p / delta))


def lambda_family_h2(params: ProblemParams) -> BoundResult:
    """R^{-p} sup over delta in (0, min(p, n)) of the h2 kernel."""
    p, n, R = params.p, params.n, params.R
    upper = min(p, n)

    def f(delta: float) -> float:
        return _h2_kernel(p, n, delta)

    grid_size = 256
    deltas = [
        _DELTA_EDGE + (upper - 2.0 * _DELTA_EDGE) * i / (grid_size - 1.0)
        for i in range(grid_size)
    ]
    values = [f(d) for d in deltas]
    best_i = max(range(grid_size), key=values.__getitem__)
    lo = deltas[best_i - 1] if best_i > 0 else deltas[0]
    hi = deltas[best_i + 1] if best_i < grid_size - 1 else deltas[-1]
    delta_star, v_star = golden_section_max(f, lo, hi, 1e-10)

    candidates = [(delta_star, v_star, "interior"), (0.0, float(n), "delta_to_0")]
    if p < n:
        # Limit of the kernel as delta -> p from below.
        candidates.append((p, (n - p) * math.exp(p - 1.0), "delta_to_p"))
    delta_best, v_best, label = max(candidates, key=lambda c: c[1])
    return BoundResult(
        "family_h2",
        v_best / R ** p,
        True,
        {"delta_star": delta_best, "candidate": label},
    )


def faber_krahn_reduce(volume: float, p: float, n: int) -> ProblemParams:
    """Parameters of the ball with the given volume (Faber-Krahn reduction).

    Any lower bound computed on the returned ball is a valid lower bound for
    the first eigenvalue of every domain with that volume.
    """
    if not (volume > 0.0):
        raise DomainError(f"faber_krahn_reduce requires volume > 0, got {volume}")
    R = (volume / ball_volume(n)) ** (1.0 / n)
    return derive(p, n, R)


_BOUND_FUNCTIONS: Dict[str, Callable[[ProblemParams], BoundResult]] = {
    "hardy": lambda_hardy,
    "cheeger": lambda_cheeger,
    "picone": lambda_picone,
    "sobolev": lambda_sobolev,
    "lindqvist": lambda_lindqvist,
    "double_singular": lambda_double_singular,
    "log_improved": lambda_log_improved,
    "family_sup": lambda_family_sup,
    "family_h2": lambda_family_h2,
}


def compute_bound(
    params: ProblemParams, kind: str, delta: Optional[float] = None
) -> BoundResult:
    """Dispatch a bound computation by kind name.

    ``family_point`` requires a delta and reports H(p, n, delta)/R^p.
    """
    if kind == "family_point":
        if delta is None:
            raise DomainError("family_point requires a delta")
        ev = family_H(params, delta)
        return BoundResult(
            "family_point",
            ev.H / params.R ** params.p,
            True,
            {"delta": delta, "branch": ev.branch, "root": ev.root},
        )
    try:
        fn = _BOUND_FUNCTIONS[kind]
    except KeyError:
        raise DomainError(
            f"unknown bound kind {kind!r}; expected one of {sorted(_BOUND_FUNCTIONS)} or family_point"
        )
    return fn(params)


def all_bounds(params: ProblemParams) -> Dict[str, BoundResult]:
    """Every named bound (family_point excluded) for one parameter set."""
    return {kind: fn(params) for kind, fn in _BOUND_FUNCTIONS.items()}
