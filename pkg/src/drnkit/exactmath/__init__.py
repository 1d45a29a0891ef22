"""Exact rational and integer linear algebra used by the decision procedures."""

from .lattice import HnfResult, hnf, integer_span_full, is_hermite_normal_form, solve_integer_system
from .lp import (
    CyclingError,
    Feasible,
    Infeasible,
    LpOutcome,
    LpProblem,
    check_farkas,
    check_primal,
    lp_feasible,
    primitive,
)
from .spans import (
    PositiveSpanResult,
    dominating_combination,
    nonnegative_combination,
    pos_span_is_full,
    row_combination_problem,
    zero_in_pos_span,
)

__all__ = [
    "CyclingError",
    "Feasible",
    "HnfResult",
    "Infeasible",
    "LpOutcome",
    "LpProblem",
    "PositiveSpanResult",
    "check_farkas",
    "check_primal",
    "dominating_combination",
    "hnf",
    "integer_span_full",
    "is_hermite_normal_form",
    "lp_feasible",
    "nonnegative_combination",
    "pos_span_is_full",
    "primitive",
    "row_combination_problem",
    "solve_integer_system",
    "zero_in_pos_span",
]
