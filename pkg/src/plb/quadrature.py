"""Adaptive tanh-sinh (double exponential) quadrature for radial integrals.

All integrals in this package are one dimensional with at most power-law or
logarithmic endpoint singularities, which is exactly the regime where the
Takahashi-Mori transformation excels.  Integrands receive the node position
together with its distance to each endpoint so that factors like
(R - rho)^alpha can be evaluated without cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from .errors import ConvergenceError, DivergenceError
from .params import sphere_measure

_PI_HALF = math.pi / 2.0

# Beyond |t| = 8 the double exponential weight underflows any practical
# tolerance, so node generation stops there.
_T_MAX = 8.0

# Endpoint distances below this fraction of the interval are never generated.
_MIN_DIST_FRACTION = 1e-280


def tanh_sinh(
    f: Callable[[float, float, float], float],
    a: float,
    b: float,
    *,
    tol: float = 1e-12,
    max_level: int = 12,
    offset_a: float = 0.0,
    offset_b: float = 0.0,
) -> Tuple[float, float]:
    """Integrate f over [a, b] adaptively, halving the mesh until converged.

    Parameters
    ----------
    f : callable
        Called as ``f(x, dist_a, dist_b)`` where ``dist_a`` and ``dist_b``
        are the distances to the (possibly offset) endpoints, supplied with
        full relative accuracy near the endpoints.
    a, b : float
        Finite integration limits, a < b.
    tol : float
        Absolute tolerance target for the integral.
    max_level : int
        Maximum number of mesh halvings.
    offset_a, offset_b : float
        Added to the reported endpoint distances.  Used when [a, b] is one
        piece of a larger interval so the integrand still sees distances to
        the outer endpoints.

    Returns
    -------
    (value, error_estimate)
    """
    if a == b:
        return 0.0, 0.0
    if a > b:
        raise DivergenceError(f"tanh_sinh requires a < b, got a={a}, b={b}")

    half = 0.5 * (b - a)
    min_dist = _MIN_DIST_FRACTION * (b - a)
    term_tol = 0.01 * tol

    def _pair(t: float) -> float:
        """Weighted contributions of the nodes at +t and -t."""
        s = _PI_HALF * math.sinh(t)
        # sech(s)^2 = 4 exp(-2s) / (1 + exp(-2s))^2, stable for s >= 0.
        e = math.exp(-2.0 * s)
        w = half * _PI_HALF * math.cosh(t) * 4.0 * e / (1.0 + e) ** 2
        # 1 - tanh(s) = 2 exp(-2s) / (1 + exp(-2s)).
        dist = half * 2.0 * e / (1.0 + e)
        if dist < min_dist or w == 0.0:
            return 0.0
        span = b - a
        # Deep in the tails the integrand may overflow even though its
        # weighted contribution is negligible; treat those nodes as zero.
        try:
            fp = f(b - dist, offset_a + (span - dist), offset_b + dist)
        except (OverflowError, ZeroDivisionError):
            fp = 0.0
        try:
            fn = f(a + dist, offset_a + dist, offset_b + (span - dist))
        except (OverflowError, ZeroDivisionError):
            fn = 0.0
        if not math.isfinite(fp):
            fp = 0.0
        if not math.isfinite(fn):
            fn = 0.0
        return (fp + fn) * w

    mid_val = f(a + half, offset_a + half, offset_b + half)
    if not math.isfinite(mid_val):
        mid_val = 0.0
    running_sum = mid_val * half * _PI_HALF

    # Level 0 tail (h = 1).
    k = 1
    while k * 1.0 <= _T_MAX:
        c = _pair(k * 1.0)
        running_sum += c
        if abs(c) < term_tol and k > 2:
            break
        k += 1

    prev_value = running_sum
    for level in range(1, max_level + 1):
        h = 0.5 ** level
        # New nodes are the odd multiples of h; even multiples were summed
        # at coarser levels.
        k = 1
        quiet = 0
        while k * h <= _T_MAX:
            c = _pair(k * h)
            running_sum += c
            if abs(c) < term_tol:
                quiet += 1
                if quiet >= 2 and k * h > 1.0:
                    break
            else:
                quiet = 0
            k += 2
        value = running_sum * h
        err = abs(value - prev_value)
        if err <= max(tol, 1e-15 * abs(value)):
            return value, err
        prev_value = value
    raise ConvergenceError(
        f"tanh_sinh: no convergence to tol={tol} within {max_level} refinements "
        f"(last value {prev_value!r})"
    )


@dataclass(frozen=True)
class RadialIntegrand:
    """A radial profile f(rho) on (a, b) with declared endpoint exponents.

    ``evaluator`` is called as ``evaluator(rho, dist_a, dist_b)``.  The
    singular exponents describe the power-law strength of f itself at each
    endpoint (0 for a regular endpoint); integrability is checked after
    including the rho^{n-1} surface factor.
    """

    evaluator: Callable[[float, float, float], float]
    singular_at_a: float = 0.0
    singular_at_b: float = 0.0
    a: float = 0.0
    b: float = 1.0
    # When true the evaluator already contains the rho^{n-1} measure factor
    # (folded into a single power to avoid intermediate overflow) and
    # singular_at_a describes the combined exponent.
    includes_measure: bool = False

    def __post_init__(self):
        if not (self.b > self.a >= 0.0):
            raise DivergenceError(
                f"RadialIntegrand requires 0 <= a < b, got a={self.a}, b={self.b}"
            )


def integrate_radial(
    f: RadialIntegrand,
    n: int,
    abs_tol: float = 1e-12,
    *,
    kinks: Optional[Sequence[float]] = None,
) -> Tuple[float, float]:
    """sigma_n-weighted integral of rho^{n-1} f(rho) over (f.a, f.b).

    Splits at interior kinks when provided; each piece uses tanh-sinh.
    Raises DivergenceError when a declared endpoint exponent makes the
    integral non-integrable.
    """
    measure_boost = 0 if f.includes_measure else (n - 1)
    exp_a = f.singular_at_a + (measure_boost if f.a == 0.0 else 0)
    if exp_a <= -1.0:
        raise DivergenceError(
            f"integrand exponent {exp_a} at left endpoint is not integrable"
        )
    if f.singular_at_b <= -1.0:
        raise DivergenceError(
            f"integrand exponent {f.singular_at_b} at right endpoint is not integrable"
        )

    sigma = sphere_measure(n)

    if f.includes_measure:
        g = f.evaluator
    else:

        def g(rho: float, da: float, db: float) -> float:
            return rho ** (n - 1) * f.evaluator(rho, da, db)

    points = [f.a]
    if kinks:
        points.extend(sorted(x for x in kinks if f.a < x < f.b))
    points.append(f.b)

    total = 0.0
    err_total = 0.0
    piece_tol = abs_tol / max(1, len(points) - 1)
    for left, right in zip(points[:-1], points[1:]):
        value, err = tanh_sinh(
            g,
            left,
            right,
            tol=piece_tol,
            offset_a=left - f.a,
            offset_b=f.b - right,
        )
        total += value
        err_total += err
    return sigma * total, sigma * err_total
