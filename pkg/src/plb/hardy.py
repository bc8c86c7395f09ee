"""Numerical verification of the Hardy inequalities and their sharpness.

Each ``verify_*`` operation evaluates both sides of one inequality with the
tanh-sinh quadrature engine on radial test functions (or the explicit
extremal family on which equality holds) and reports the ratio of the two
sides.  Boundary sphere terms are computed analytically for radial
functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from scipy.special import zeta as _zeta

from .errors import DomainError
from .params import ProblemParams
from .quadrature import RadialIntegrand, integrate_radial, tanh_sinh

_ADMISSIBILITY_GUARD = 1e-3


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one named inequality or sharpness check.

    For inequality checks ``passed`` means ratio >= 1 - tolerance; for
    equality/sharpness checks it means |ratio - target| <= tolerance with
    the target recorded in ``details``.
    """

    case_name: str
    lhs: float
    rhs: float
    ratio: float
    lhs_error_est: float
    rhs_error_est: float
    tolerance: float
    passed: bool
    details: Dict[str, object] = field(default_factory=dict)


def _inequality_report(case, lhs, rhs, lerr, rerr, tol, **details):
    ratio = lhs / rhs
    return VerificationReport(
        case_name=case,
        lhs=lhs,
        rhs=rhs,
        ratio=ratio,
        lhs_error_est=lerr,
        rhs_error_est=rerr,
        tolerance=tol,
        passed=ratio >= 1.0 - tol,
        details=details,
    )


def _equality_report(case, lhs, rhs, lerr, rerr, tol, target=1.0, **details):
    ratio = lhs / rhs
    return VerificationReport(
        case_name=case,
        lhs=lhs,
        rhs=rhs,
        ratio=ratio,
        lhs_error_est=lerr,
        rhs_error_est=rerr,
        tolerance=tol,
        passed=abs(ratio - target) <= tol,
        details={"target": target, **details},
    )


def one_minus_pow(R: float, rho: float, db: float, alpha: float) -> float:
    """R^alpha - rho^alpha for rho in (0, R), stable near both endpoints.

    Near rho = R the difference is formed from db = R - rho to avoid
    cancellation; elsewhere the direct form is exact enough.  Positive for
    alpha > 0, negative for alpha < 0.
    """
    if db < 0.5 * R:
        return -(R ** alpha) * math.expm1(alpha * math.log1p(-db / R))
    return R ** alpha - rho ** alpha


def log_R_over(R: float, rho: float, db: float) -> float:
    """ln(R/rho) evaluated stably, using db = R - rho near the boundary."""
    if db < 0.5 * R:
        return -math.log1p(-db / R)
    return math.log(R / rho)


# ---------------------------------------------------------------------------
# Built-in radial test functions, all vanishing at rho = R and smooth at 0.
# Each entry: (u(rho, db, R), u'(rho, db, R), vanishing order at R).
# ---------------------------------------------------------------------------


def _quad_u(rho, db, R):
    return (db / R) ** 2


def _quad_du(rho, db, R):
    return -2.0 * db / R ** 2


def _biquad_u(rho, db, R):
    return (db * (R + rho) / R ** 2) ** 2


def _biquad_du(rho, db, R):
    return -4.0 * rho / R ** 2 * (db * (R + rho) / R ** 2)


def _cos_u(rho, db, R):
    return math.sin(math.pi * db / (2.0 * R))


def _cos_du(rho, db, R):
    return -math.pi / (2.0 * R) * math.cos(math.pi * db / (2.0 * R))


TEST_FUNCTIONS: Dict[str, Tuple[Callable, Callable, int]] = {
    "quadratic": (_quad_u, _quad_du, 2),
    "biquadratic": (_biquad_u, _biquad_du, 2),
    "cosine": (_cos_u, _cos_du, 1),
}


def _get_test_function(name: str):
    try:
        return TEST_FUNCTIONS[name]
    except KeyError:
        raise DomainError(
            f"unknown test function {name!r}; expected one of {sorted(TEST_FUNCTIONS)}"
        )


# ---------------------------------------------------------------------------
# Sharpness on the annulus and the ball (extremal family u_k, u_s).
# ---------------------------------------------------------------------------


def _uk_profile(params: ProblemParams, k: float):
    """t(rho) = (R^m - rho^m)/m > 0 on (0, R) and helpers for u = t^k."""
    R, m = params.R, params.m

    def t_of(rho: float, db: float) -> float:
        return one_minus_pow(R, rho, db, m) / m

    return t_of


def verify_annulus_sharpness(
    params: ProblemParams,
    r: float,
    k_or_s: float,
    tolerance: float = 1e-6,
    u_scale: float = 1.0,
) -> VerificationReport:
    """Equality check of the annulus inequality on its extremal family.

    Uses u_k = ((R^m - rho^m)/m)^k for p != n and u_s = (ln(R/rho))^s for
    p = n, on the annulus r < rho < R.  The inner-sphere boundary term is
    evaluated analytically.
    """
    p, n, R, m = params.p, params.n, params.R, params.m
    sigma = params.sigma_n
    if not (0.0 < r < R):
        raise DomainError(f"verify_annulus_sharpness requires 0 < r < R, got r={r}")
    c = u_scale

    if p != n:
        k = k_or_s
        k_min = 1.0 / params.p_prime + _ADMISSIBILITY_GUARD
        if k < k_min:
            raise DomainError(
                f"annulus family requires k >= 1/p' + {_ADMISSIBILITY_GUARD}, got k={k}"
            )
        t_of = _uk_profile(params, k)
        abs_m = abs(m)

        def lhs_eval(rho, da, db):
            return (c * k) ** p * rho ** ((m - 1.0) * p) * t_of(rho, db) ** ((k - 1.0) * p)

        def k1_eval(rho, da, db):
            t = t_of(rho, db)
            return c ** p * t ** (p * k) * rho ** (m - n) * (abs_m * t) ** (-p)

        L, L_err = integrate_radial(
            RadialIntegrand(lhs_eval, 0.0, (k - 1.0) * p, r, R), n, 1e-13
        )
        K1, K1_err = integrate_radial(
            RadialIntegrand(k1_eval, 0.0, (k - 1.0) * p, r, R), n, 1e-13
        )
        t_r = t_of(r, R - r)
        rhs1 = (abs_m / params.p_prime) * K1 ** (1.0 / p)
        rhs2 = (
            (sigma / p)
            * (c * t_r ** k) ** p
            * (abs_m * t_r) ** (1.0 - p)
            * K1 ** (-1.0 / params.p_prime)
        )
        lhs = L ** (1.0 / p)
        return _equality_report(
            "annulus_sharpness_uk",
            lhs,
            rhs1 + rhs2,
            L_err,
            K1_err,
            tolerance,
            p=p,
            n=n,
            R=R,
            r=r,
            k=k,
        )

    # p = n: logarithmic family.
    s = k_or_s
    n_prime = n / (n - 1.0)
    s_min = 1.0 / n_prime + _ADMISSIBILITY_GUARD
    if s < s_min:
        raise DomainError(
            f"annulus log family requires s >= 1/n' + {_ADMISSIBILITY_GUARD}, got s={s}"
        )

    def lhs_eval(rho, da, db):
        return (c * s) ** n * rho ** (-n) * log_R_over(R, rho, db) ** ((s - 1.0) * n)

    def k1_eval(rho, da, db):
        return c ** n * rho ** (-n) * log_R_over(R, rho, db) ** (n * s - n)

    L, L_err = integrate_radial(
        RadialIntegrand(lhs_eval, 0.0, (s - 1.0) * n, r, R), n, 1e-13
    )
    K1, K1_err = integrate_radial(
        RadialIntegrand(k1_eval, 0.0, n * s - n, r, R), n, 1e-13
    )
    T_r = math.log(R / r)
    rhs1 = ((n - 1.0) / n) * K1 ** (1.0 / n)
    rhs2 = (
        (sigma / n)
        * (c * T_r ** s) ** n
        * T_r ** (1.0 - n)
        * K1 ** (-(n - 1.0) / n)
    )
    lhs = L ** (1.0 / n)
    return _equality_report(
        "annulus_sharpness_us",
        lhs,
        rhs1 + rhs2,
        L_err,
        K1_err,
        tolerance,
        n=n,
        R=R,
        r=r,
        s=s,
    )


def verify_ball_sharpness(
    params: ProblemParams,
    k: float,
    tolerance: float = 1e-6,
    u_scale: float = 1.0,
) -> VerificationReport:
    """Equality check of the ball inequality (p > n) on u_k.

    The boundary term involves the center value u(0) = (R^m/m)^k times the
    sphere measure, evaluated analytically.
    """
    p, n, R, m = params.p, params.n, params.R, params.m
    sigma = params.sigma_n
    if not (p > n):
        raise DomainError(f"verify_ball_sharpness requires p > n, got p={p}, n={n}")
    k_min = 1.0 / params.p_prime + _ADMISSIBILITY_GUARD
    if k < k_min:
        raise DomainError(
            f"ball family requires k >= 1/p' + {_ADMISSIBILITY_GUARD}, got k={k}"
        )
    c = u_scale
    t_of = _uk_profile(params, k)

    def lhs_eval(rho, da, db):
        return (c * k) ** p * rho ** ((m - 1.0) * p) * t_of(rho, db) ** ((k - 1.0) * p)

    def k1_eval(rho, da, db):
        t = t_of(rho, db)
        return c ** p * t ** (p * k) * rho ** (m - n) * (m * t) ** (-p)

    L, L_err = integrate_radial(
        RadialIntegrand(lhs_eval, (m - 1.0) * p, (k - 1.0) * p, 0.0, R), n, 1e-13
    )
    K1, K1_err = integrate_radial(
        RadialIntegrand(k1_eval, m - n, (k - 1.0) * p, 0.0, R), n, 1e-13
    )
    u0 = c * (R ** m / m) ** k
    rhs1 = (m / params.p_prime) * K1 ** (1.0 / p)
    rhs2 = (1.0 / p) * R ** (n - p) * sigma * u0 ** p * K1 ** (-1.0 / params.p_prime)
    lhs = L ** (1.0 / p)
    return _equality_report(
        "ball_sharpness_uk", lhs, rhs1 + rhs2, L_err, K1_err, tolerance,
        p=p, n=n, R=R, k=k,
    )


# ---------------------------------------------------------------------------
# Optimality sweeps (the constant cannot be improved).
# ---------------------------------------------------------------------------


def verify_optimality_sweep(
    params: ProblemParams,
    eps: float,
    r0: float = 0.2,
    tolerance: float = 1e-6,
    u_scale: float = 1.0,
) -> VerificationReport:
    """Near-equality family u_eps for p <= n.

    For p < n the ratio of the two sides lies strictly in (1, (1+eps)^p);
    for p = n the truncated logarithmic family gives ratio (1+eps)^{n-1}
    exactly.
    """
    p, n, R = params.p, params.n, params.R
    sigma = params.sigma_n
    if not (0.0 < eps < 1.0):
        raise DomainError(f"verify_optimality_sweep requires 0 < eps < 1, got {eps}")
    if p > n:
        raise DomainError(f"verify_optimality_sweep requires p <= n, got p={p}, n={n}")
    c = u_scale

    if p < n:
        mu = (n - p) / (p - 1.0)  # |m|
        a_exp = (mu / params.p_prime) * (1.0 - eps)
        b_exp = (1.0 + eps) / params.p_prime

        def big_g(rho: float, db: float) -> float:
            return one_minus_pow(R, rho, db, mu)

        # The rho^{n-1} measure is folded into the evaluators so the
        # near-origin power stays representable.
        lhs_exp_a = (n - 1.0) - p * (a_exp + 1.0)
        rhs_exp_a = -1.0 - mu + mu * p - p * a_exp

        def lhs_eval(rho, da, db):
            g = big_g(rho, db)
            bracket = a_exp * g + b_exp * mu * rho ** mu
            return (
                c ** p
                * rho ** lhs_exp_a
                * g ** (p * (b_exp - 1.0))
                * bracket ** p
            )

        def rhs_eval(rho, da, db):
            g = big_g(rho, db)
            return (
                c ** p
                * rho ** rhs_exp_a
                * R ** (mu * p)
                * g ** (p * b_exp - p)
            )

        sing_b = p * (b_exp - 1.0)
        lhs, lerr = integrate_radial(
            RadialIntegrand(lhs_eval, lhs_exp_a, sing_b, 0.0, R, includes_measure=True),
            n,
            1e-13,
        )
        rhs_int, rerr = integrate_radial(
            RadialIntegrand(rhs_eval, rhs_exp_a, sing_b, 0.0, R, includes_measure=True),
            n,
            1e-13,
        )
        rhs = (mu / params.p_prime) ** p * rhs_int
        ratio = lhs / rhs
        upper = (1.0 + eps) ** p
        return VerificationReport(
            case_name="optimality_sweep_p_lt_n",
            lhs=lhs,
            rhs=rhs,
            ratio=ratio,
            lhs_error_est=lerr,
            rhs_error_est=rerr,
            tolerance=tolerance,
            passed=1.0 < ratio < upper,
            details={"eps": eps, "upper": upper, "p": p, "n": n},
        )

    # p = n: truncated logarithmic family.
    if not (0.0 < r0 < R):
        raise DomainError(f"verify_optimality_sweep requires 0 < r0 < R, got r0={r0}")
    s = (n - 1.0) * (1.0 + eps) / n
    T0 = math.log(R / r0)

    def lhs_eval(rho, da, db):
        return (c * s) ** n * rho ** (-n) * log_R_over(R, rho, db) ** ((s - 1.0) * n)

    lhs, lerr = integrate_radial(
        RadialIntegrand(lhs_eval, 0.0, (s - 1.0) * n, r0, R), n, 1e-13
    )

    def rhs_outer_eval(rho, da, db):
        return c ** n * rho ** (-n) * log_R_over(R, rho, db) ** (n * s - n)

    rhs_outer, rerr_outer = integrate_radial(
        RadialIntegrand(rhs_outer_eval, 0.0, n * s - n, r0, R), n, 1e-13
    )
    # Inner piece: u is constant, the weight integral over (0, r0) maps to a
    # polynomial through T = T0 / w^2 with T = ln(R/rho).
    inner_core, rerr_inner = tanh_sinh(
        lambda w, da, db: 2.0 * T0 ** (1.0 - n) * w ** (2 * n - 3),
        0.0,
        1.0,
        tol=1e-14,
    )
    rhs_inner = sigma * (c * T0 ** s) ** n * inner_core
    coeff = ((n - 1.0) / n) ** n
    rhs = coeff * (rhs_outer + rhs_inner)
    target = (1.0 + eps) ** (n - 1.0)
    return _equality_report(
        "optimality_sweep_p_eq_n",
        lhs,
        rhs,
        lerr,
        rerr_outer + rerr_inner,
        tolerance,
        target=target,
        eps=eps,
        r0=r0,
        n=n,
    )


# ---------------------------------------------------------------------------
# Trace-term equality (u_k = |x|^k on the ball).
# ---------------------------------------------------------------------------


def verify_trace_sharpness(
    params: ProblemParams,
    l: float,
    k: float,
    tolerance: float = 1e-10,
    u_scale: float = 1.0,
) -> VerificationReport:
    """Equality L = (1/p)^p |K3 + (p-1)K|^p / K^{p-1} for u = |x|^k on B_R.

    The boundary functional K3 is computed analytically on the sphere; its
    sign combined with (p-1)K is recorded in the details.
    """
    p, n, R = params.p, params.n, params.R
    sigma = params.sigma_n
    if l == p - n:
        raise DomainError(f"verify_trace_sharpness requires l != p - n, got l={l}")
    k_min = (p - l - n) / p
    if not (k > k_min):
        raise DomainError(
            f"trace family requires k > (p-l-n)/p = {k_min}, got k={k}"
        )
    if k == 0.0:
        raise DomainError("trace family requires k != 0 (non-constant u)")
    c_const = abs(p - l - n) / (p - 1.0)
    cs = u_scale

    def l_eval(rho, da, db):
        return (cs * abs(k)) ** p * rho ** (l + (k - 1.0) * p)

    def k_eval(rho, da, db):
        return cs ** p * rho ** (l - p + p * k)

    L_int, L_err = integrate_radial(
        RadialIntegrand(l_eval, l + (k - 1.0) * p, 0.0, 0.0, R), n, 1e-14
    )
    K_int, K_err = integrate_radial(
        RadialIntegrand(k_eval, l - p + p * k, 0.0, 0.0, R), n, 1e-14
    )
    L = c_const ** (1.0 - p) * L_int
    K = c_const * K_int
    q = n + l + p * k - p
    K3 = math.copysign(1.0, p - l - n) * sigma * cs ** p * R ** q
    combo = K3 + (p - 1.0) * K
    rhs = (1.0 / p) ** p * abs(combo) ** p / K ** (p - 1.0)
    return _equality_report(
        "trace_sharpness_uk",
        L,
        rhs,
        L_err,
        K_err,
        tolerance,
        p=p,
        l=l,
        n=n,
        k=k,
        K3=K3,
        K=K,
        sign_combo=math.copysign(1.0, combo),
    )


# ---------------------------------------------------------------------------
# Eigenfunction-weight equality case (p = 2, n = 3, unit ball).
# ---------------------------------------------------------------------------

_ZETA_TERMS = 40
_ZETA_EVEN = [float(_zeta(2 * kk, 1)) for kk in range(1, _ZETA_TERMS + 1)]


def _cot_minus_inv(rho: float, db: float) -> float:
    """pi*cot(pi*rho) - 1/rho on (0, 1), stable at both endpoints.

    Near the origin the difference suffers catastrophic cancellation, so a
    series in even zeta values is used for rho < 0.1; near rho = 1 the
    cotangent is evaluated through the distance db = 1 - rho.
    """
    if rho < 0.1:
        acc = 0.0
        power = rho
        rho2 = rho * rho
        for z in _ZETA_EVEN:
            term = 2.0 * z * power
            acc -= term
            power *= rho2
            if term < 1e-20 * abs(acc):
                break
        return acc
    if rho > 0.5:
        # cot(pi rho) = -cot(pi db)
        cot = -math.cos(math.pi * db) / math.sin(math.pi * db)
    else:
        cot = math.cos(math.pi * rho) / math.sin(math.pi * rho)
    return math.pi * cot - 1.0 / rho


def _sinc_u(rho: float, db: float) -> float:
    """u(rho) = sin(pi rho)/(pi rho), evaluated through db near rho = 1."""
    if rho > 0.5:
        return math.sin(math.pi * db) / (math.pi * rho)
    if rho < 1e-8:
        return 1.0 - (math.pi * rho) ** 2 / 6.0
    return math.sin(math.pi * rho) / (math.pi * rho)


def _sinc_du(rho: float, db: float) -> float:
    """Derivative of sin(pi rho)/(pi rho), series below rho = 0.1."""
    if rho < 0.1:
        acc = 0.0
        sign = -1.0
        fact = 6.0  # (2j+1)! for j = 1
        power = rho
        j = 1
        while True:
            term = sign * 2.0 * j * math.pi ** (2 * j) * power / fact
            acc += term
            if abs(term) < 1e-22:
                break
            j += 1
            sign = -sign
            fact *= (2 * j) * (2 * j + 1)
            power *= rho * rho
        return acc
    if rho > 0.5:
        num = math.pi * rho * math.cos(math.pi * rho) - math.sin(math.pi * db)
        return num / (math.pi * rho * rho)
    return (math.pi * rho * math.cos(math.pi * rho) - math.sin(math.pi * rho)) / (
        math.pi * rho * rho
    )


def verify_eigenweight_case(
    tol: float = 1e-6, u_scale: float = 1.0
) -> VerificationReport:
    """Equality case with the eigenfunction weight (p=2, n=3, unit ball).

    With u the first radial eigenfunction sin(pi r)/(pi r), the functionals
    satisfy L = (1/4)(K + 2N + N^2/K) exactly, and L = pi^2 * integral of
    u^2 since u is the eigenfunction.
    """
    n = 3
    c = u_scale

    def l_eval(rho, da, db):
        return (c * _sinc_du(rho, db)) ** 2

    def k_eval(rho, da, db):
        return _cot_minus_inv(rho, db) ** 2 * (c * _sinc_u(rho, db)) ** 2

    def i_eval(rho, da, db):
        return (c * _sinc_u(rho, db)) ** 2

    L, L_err = integrate_radial(RadialIntegrand(l_eval, 0.0, 0.0, 0.0, 1.0), n, 1e-13)
    K, K_err = integrate_radial(RadialIntegrand(k_eval, 0.0, 0.0, 0.0, 1.0), n, 1e-13)
    I, I_err = integrate_radial(RadialIntegrand(i_eval, 0.0, 0.0, 0.0, 1.0), n, 1e-13)
    N = math.pi ** 2 * I
    rhs = 0.25 * (K + 2.0 * N + N ** 2 / K)
    return _equality_report(
        "eigenweight_equality",
        L,
        rhs,
        L_err,
        K_err + I_err,
        tol,
        L_over_pi2_I=L / (math.pi ** 2 * I),
        N_over_I=N / I,
        K=K,
        N=N,
    )


# ---------------------------------------------------------------------------
# One-parametric family inequality on smooth test functions.
# ---------------------------------------------------------------------------


def verify_oneparam_inequality(
    params: ProblemParams,
    delta: float,
    test_fn: str = "quadratic",
    tolerance: float = 1e-9,
    u_scale: float = 1.0,
) -> VerificationReport:
    """Inequality with the double singular weight pair at one delta in (0, n).

    Uses the logarithmic weight branch at delta = p.
    """
    p, n, R = params.p, params.n, params.R
    if not (0.0 < delta < n):
        raise DomainError(
            f"verify_oneparam_inequality requires 0 < delta < n, got delta={delta}"
        )
    u, du, vanish = _get_test_function(test_fn)
    c = u_scale

    def lhs_eval(rho, da, db):
        return abs(c * du(rho, db, R)) ** p

    lhs, lerr = integrate_radial(
        RadialIntegrand(lhs_eval, 0.0, 0.0, 0.0, R), n, 1e-13
    )

    if delta != p:
        e = (p - delta) / (p - 1.0)
        coeff1 = abs((p - delta) / p) ** p
        coeff2 = (n - delta) * abs((p - delta) / p) ** (p - 1.0)

        def w1_eval(rho, da, db):
            diff = abs(one_minus_pow(R, rho, db, e))
            return (c * u(rho, db, R)) ** p * rho ** (-(delta - 1.0) * p / (p - 1.0)) * diff ** (-p)

        def w2_eval(rho, da, db):
            diff = abs(one_minus_pow(R, rho, db, e))
            return (c * u(rho, db, R)) ** p * rho ** (-delta) * diff ** (1.0 - p)

        if delta < p:
            sing1_a = -(delta - 1.0) * p / (p - 1.0)
            sing2_a = -delta
        else:
            sing1_a = -p
            sing2_a = -p
        # Near R the weight difference behaves like db, u like db^vanish.
        sing1_b = vanish * p - p
        sing2_b = vanish * p - (p - 1.0)
        t1, e1 = integrate_radial(
            RadialIntegrand(w1_eval, sing1_a, sing1_b, 0.0, R), n, 1e-13
        )
        t2, e2 = integrate_radial(
            RadialIntegrand(w2_eval, sing2_a, sing2_b, 0.0, R), n, 1e-13
        )
        rhs = coeff1 * t1 + coeff2 * t2
        rerr = coeff1 * e1 + coeff2 * e2
        branch = "below_p" if delta < p else "above_p"
    else:
        coeff1 = ((p - 1.0) / p) ** p
        coeff2 = ((p - 1.0) / p) ** (p - 1.0) * abs(n - p)

        def w1_eval(rho, da, db):
            T = log_R_over(R, rho, db)
            return (c * u(rho, db, R)) ** p * rho ** (-p) * T ** (-p)

        def w2_eval(rho, da, db):
            T = log_R_over(R, rho, db)
            return (c * u(rho, db, R)) ** p * rho ** (-p) * T ** (1.0 - p)

        t1, e1 = integrate_radial(
            RadialIntegrand(w1_eval, -p, vanish * p - p, 0.0, R), n, 1e-13
        )
        t2, e2 = integrate_radial(
            RadialIntegrand(w2_eval, -p, vanish * p - (p - 1.0), 0.0, R), n, 1e-13
        )
        rhs = coeff1 * t1 + coeff2 * t2
        rerr = coeff1 * e1 + coeff2 * e2
        branch = "at_p"
    return _inequality_report(
        "oneparam_inequality",
        lhs,
        rhs,
        lerr,
        rerr,
        tolerance,
        delta=delta,
        branch=branch,
        test_fn=test_fn,
    )


# ---------------------------------------------------------------------------
# Star-shaped (ball) optimality sweep for the weighted inequality.
# ---------------------------------------------------------------------------


def verify_sweep_starshaped(
    params: ProblemParams,
    eps: float,
    mu_cut: float = 0.2,
    tolerance: float = 1e-6,
    u_scale: float = 1.0,
) -> VerificationReport:
    """Optimality sweep on the unit ball for the distance-weight inequality.

    The case is selected by the sign of k = (n - p)/(p - 1): power family
    for k > 0, boundary family for k < 0 (exact ratio (1+eps)^p gamma^p),
    truncated logarithmic family for k = 0.
    """
    p, n = params.p, params.n
    sigma = params.sigma_n
    if not (0.0 < eps < 1.0):
        raise DomainError(f"verify_sweep_starshaped requires 0 < eps < 1, got {eps}")
    gamma = (p - 1.0) / p
    k = (n - p) / (p - 1.0)
    c = u_scale

    if k > 0.0:
        b = gamma * (1.0 + eps)
        a = gamma * k * (1.0 - eps)

        def g1(rho, db):
            return one_minus_pow(1.0, rho, db, k)

        # Measure folded into the evaluators (see verify_optimality_sweep).
        exp_a = (n - 1.0) - p * (a + 1.0)

        def lhs_eval(rho, da, db):
            g = g1(rho, db)
            bracket = b * k * rho ** k + a * g
            return c ** p * rho ** exp_a * g ** (p * (b - 1.0)) * bracket ** p

        def rhs_eval(rho, da, db):
            g = g1(rho, db)
            return c ** p * k ** p * rho ** exp_a * g ** (p * b - p)

        sing_b = p * (b - 1.0)
        lhs, lerr = integrate_radial(
            RadialIntegrand(lhs_eval, exp_a, sing_b, 0.0, 1.0, includes_measure=True),
            n,
            1e-13,
        )
        rhs, rerr = integrate_radial(
            RadialIntegrand(rhs_eval, exp_a, sing_b, 0.0, 1.0, includes_measure=True),
            n,
            1e-13,
        )
        ratio = lhs / rhs
        lo, hi = gamma ** p, (1.0 + eps) ** p * gamma ** p
        return VerificationReport(
            case_name="starshaped_sweep_k_pos",
            lhs=lhs,
            rhs=rhs,
            ratio=ratio,
            lhs_error_est=lerr,
            rhs_error_est=rerr,
            tolerance=tolerance,
            passed=lo - tolerance <= ratio <= hi + tolerance,
            details={"eps": eps, "bracket": (lo, hi), "k": k},
        )

    if k < 0.0:
        ak = abs(k)
        b = gamma * (1.0 + eps)

        def g2(rho, db):
            return one_minus_pow(1.0, rho, db, ak)

        def lhs_eval(rho, da, db):
            g = g2(rho, db)
            return c ** p * (b * ak) ** p * rho ** ((ak - 1.0) * p) * g ** ((b - 1.0) * p)

        def rhs_eval(rho, da, db):
            g = g2(rho, db)
            return c ** p * ak ** p * rho ** (ak * p - p) * g ** (p * b - p)

        sing_b = (b - 1.0) * p
        lhs, lerr = integrate_radial(
            RadialIntegrand(lhs_eval, (ak - 1.0) * p, sing_b, 0.0, 1.0), n, 1e-13
        )
        rhs, rerr = integrate_radial(
            RadialIntegrand(rhs_eval, ak * p - p, sing_b, 0.0, 1.0), n, 1e-13
        )
        target = (1.0 + eps) ** p * gamma ** p
        return _equality_report(
            "starshaped_sweep_k_neg",
            lhs,
            rhs,
            lerr,
            rerr,
            tolerance,
            target=target,
            eps=eps,
            k=k,
        )

    # k = 0 (p = n): truncated logarithmic family with cut at mu_cut.
    if not (0.0 < mu_cut < 1.0):
        raise DomainError(f"verify_sweep_starshaped requires 0 < mu_cut < 1, got {mu_cut}")
    b = gamma * (1.0 + eps)
    T_mu = math.log(1.0 / mu_cut)

    def lhs_eval(rho, da, db):
        return (c * b) ** p * rho ** (-p) * log_R_over(1.0, rho, db) ** ((b - 1.0) * p)

    lhs, lerr = integrate_radial(
        RadialIntegrand(lhs_eval, 0.0, (b - 1.0) * p, mu_cut, 1.0), n, 1e-13
    )

    def rhs_outer_eval(rho, da, db):
        return c ** p * rho ** (-p) * log_R_over(1.0, rho, db) ** (p * b - p)

    rhs_outer, rerr_outer = integrate_radial(
        RadialIntegrand(rhs_outer_eval, 0.0, p * b - p, mu_cut, 1.0), n, 1e-13
    )
    inner_core, rerr_inner = tanh_sinh(
        lambda w, da, db: 2.0 * T_mu ** (1.0 - p) * w ** (2 * p - 3),
        0.0,
        1.0,
        tol=1e-14,
    )
    rhs_inner = sigma * (c * T_mu ** b) ** p * inner_core
    rhs = rhs_outer + rhs_inner
    ratio = lhs / rhs
    lo, hi = gamma ** p, (1.0 + eps) ** p * gamma ** p
    return VerificationReport(
        case_name="starshaped_sweep_k_zero",
        lhs=lhs,
        rhs=rhs,
        ratio=ratio,
        lhs_error_est=lerr,
        rhs_error_est=rerr_outer + rerr_inner,
        tolerance=tolerance,
        passed=lo - tolerance <= ratio <= hi + tolerance,
        details={"eps": eps, "bracket": (lo, hi), "mu_cut": mu_cut},
    )


# ---------------------------------------------------------------------------
# Pointwise kernel lemmas on dense grids.
# ---------------------------------------------------------------------------


def _grid(R: float, grid_points: int) -> List[float]:
    return [R * (i + 0.5) / grid_points for i in range(grid_points)]


def verify_pointwise_lemmas(
    params: ProblemParams,
    grid_points: int = 10000,
    delta: Optional[float] = None,
) -> List[VerificationReport]:
    """Pointwise kernel comparisons on a dense radial grid.

    Returns one report per lemma applicable at these parameters:

    * power weight vs distance weight (needs 1 < delta < n, delta != p),
    * log weight vs distance weight (any p),
    * outer radius difference bound (needs p > n),
    * star domain distance bound (needs n > p).
    """
    p, n, R, m = params.p, params.n, params.R, params.m
    if grid_points < 1000:
        raise DomainError(
            f"verify_pointwise_lemmas requires grid_points >= 1000, got {grid_points}"
        )
    reports: List[VerificationReport] = []
    grid = _grid(R, grid_points)
    tol_abs = 1e-12

    def scan(case, lhs_fn, rhs_fn, **details):
        min_margin = math.inf
        min_ratio = math.inf
        arg = None
        for rho in grid:
            lv, rv = lhs_fn(rho), rhs_fn(rho)
            scale = max(abs(lv), abs(rv), 1e-300)
            margin = (lv - rv) / scale
            if margin < min_margin:
                min_margin = margin
            ratio = lv / rv if rv != 0.0 else math.inf
            if ratio < min_ratio:
                min_ratio = ratio
                arg = (rho, lv, rv)
        rho_star, lv, rv = arg
        return VerificationReport(
            case_name=case,
            lhs=lv,
            rhs=rv,
            ratio=min_ratio,
            lhs_error_est=0.0,
            rhs_error_est=0.0,
            tolerance=tol_abs,
            passed=min_margin >= -tol_abs,
            details={"min_margin": min_margin, "rho_at_min": rho_star, **details},
        )

    if delta is not None and 1.0 < delta < n and delta != p:
        e = (p - delta) / (p - 1.0)
        cL = abs((p - delta) / p) ** p
        cR = ((p - 1.0) / p) ** p
        reports.append(
            scan(
                "pointwise_power_weight",
                lambda rho: cL
                * rho ** ((1.0 - delta) * p / (p - 1.0))
                * abs(one_minus_pow(R, rho, R - rho, e)) ** (-p),
                lambda rho: cR * (R - rho) ** (-p),
                delta=delta,
            )
        )

    cR0 = ((p - 1.0) / p) ** p
    reports.append(
        scan(
            "pointwise_log_weight",
            lambda rho: cR0 * rho ** (-p) * math.log(R / rho) ** (-p),
            lambda rho: cR0 * (R - rho) ** (-p),
        )
    )

    if p > n:
        reports.append(
            scan(
                "pointwise_outer_radius",
                lambda rho: (p - n) * (R - rho),
                lambda rho: (p - 1.0)
                * rho ** ((n - 1.0) / (p - 1.0))
                * one_minus_pow(R, rho, R - rho, m),
            )
        )

    if n > p:
        kk = (n - p) / (p - 1.0)
        reports.append(
            scan(
                "pointwise_star_domain",
                lambda rho: R - rho,
                lambda rho: (rho / kk) * (1.0 - (rho / R) ** kk),
            )
        )
    return reports


# ---------------------------------------------------------------------------
# Logarithmically improved inequality (p > n).
# ---------------------------------------------------------------------------


def verify_log_term_inequality(
    params: ProblemParams,
    test_fn: str = "quadratic",
    tolerance: float = 1e-9,
    u_scale: float = 1.0,
) -> VerificationReport:
    """Inequality with the log-improved double singular weight (p > n)."""
    p, n, R, m = params.p, params.n, params.R, params.m
    if not (p > n):
        raise DomainError(
            f"verify_log_term_inequality requires p > n, got p={p}, n={n}"
        )
    u, du, vanish = _get_test_function(test_fn)
    c = u_scale

    a_const = -(p - 2.0) / (6.0 * (p - 1.0))
    y0 = 2.0 / (1.0 + math.sqrt((5.0 * p - 7.0) / (3.0 * (p - 1.0))))
    tau0 = math.exp(1.0 / y0 - 1.0)
    coeff = ((p - n) / p) ** p
    log_coeff = p / (2.0 * (p - 1.0))

    def lhs_eval(rho, da, db):
        return abs(c * du(rho, db, R)) ** p

    lhs, lerr = integrate_radial(
        RadialIntegrand(lhs_eval, 0.0, 0.0, 0.0, R), n, 1e-13
    )

    def rhs_eval(rho, da, db):
        diff = one_minus_pow(R, rho, db, m)  # R^m - rho^m > 0 for p > n
        arg = diff / (math.e * tau0 * R ** m)
        bracket = 1.0 + log_coeff / math.log(arg) ** 2
        return (
            bracket
            * (c * u(rho, db, R)) ** p
            * rho ** (-(n - 1.0) * params.p_prime)
            * diff ** (-p)
        )

    rhs_int, rerr = integrate_radial(
        RadialIntegrand(
            rhs_eval, -(n - 1.0) * params.p_prime, vanish * p - p, 0.0, R
        ),
        n,
        1e-13,
    )
    rhs = coeff * rhs_int
    return _inequality_report(
        "log_term_inequality",
        lhs,
        rhs,
        lerr,
        coeff * rerr,
        tolerance,
        a=a_const,
        y0=y0,
        tau0=tau0,
        test_fn=test_fn,
    )
