"""Lower bounds for the first Dirichlet eigenvalue of the p-Laplacian.

Analytical bounds on balls (general domains via symmetrization), numerical
verification of the underlying Hardy inequalities with double singular
weights, a radial inverse-power eigenvalue solver, and crossover analysis
between the bounds.
"""

from .bounds import (
    BOUND_KINDS,
    BoundResult,
    FamilyEvaluation,
    all_bounds,
    compute_bound,
    faber_krahn_reduce,
    family_H,
    lambda_double_singular,
    lambda_family_h2,
    lambda_family_sup,
    lambda_log_improved,
)
from .compare import (
    CrossoverResult,
    TableRow,
    crossover_p0n,
    crossover_p1n_p3n,
    crossover_table1,
    find_root,
    reproduce_table1,
    reproduce_table2,
)
from .eigen import (
    EigenResult,
    RadialGrid,
    inverse_power_iterate,
    poisson_solve_radial,
    rayleigh_quotient,
)
from .errors import (
    BracketError,
    ConvergenceError,
    DivergenceError,
    DomainError,
    NumericError,
    PlbError,
)
from .hardy import VerificationReport
from .params import ProblemParams, derive
from .suites import run_suite

__all__ = [
    "BOUND_KINDS",
    "BoundResult",
    "BracketError",
    "ConvergenceError",
    "CrossoverResult",
    "DivergenceError",
    "DomainError",
    "EigenResult",
    "FamilyEvaluation",
    "NumericError",
    "PlbError",
    "ProblemParams",
    "RadialGrid",
    "TableRow",
    "VerificationReport",
    "all_bounds",
    "compute_bound",
    "crossover_p0n",
    "crossover_p1n_p3n",
    "crossover_table1",
    "derive",
    "faber_krahn_reduce",
    "family_H",
    "find_root",
    "inverse_power_iterate",
    "lambda_double_singular",
    "lambda_family_h2",
    "lambda_family_sup",
    "lambda_log_improved",
    "poisson_solve_radial",
    "rayleigh_quotient",
    "reproduce_table1",
    "reproduce_table2",
    "run_suite",
]
