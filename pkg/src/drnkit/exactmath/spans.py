"""Span-membership queries over the rows of an integer matrix, as exact LPs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .lp import Feasible, Infeasible, LpOutcome, LpProblem, lp_feasible, primitive


def _transpose(M: Sequence[Sequence[int]], d: int) -> list[list[int]]:
    return [[row[k] for row in M] for k in range(d)]


def row_combination_problem(
    M: Sequence[Sequence[int]], target: Sequence, lower: Sequence | None = None
) -> LpProblem:
    """LP for ``lam @ M == target`` with ``lam >= lower`` (default 0)."""
    d = len(target)
    n = len(M)
    if lower is None:
        lower = [0] * n
    return LpProblem.build(_transpose(M, d), target, lower, nvars=n)


def nonnegative_combination(M: Sequence[Sequence[int]], target: Sequence) -> LpOutcome:
    return lp_feasible(row_combination_problem(M, target))


def dominating_combination(M: Sequence[Sequence[int]], target: Sequence) -> LpOutcome:
    """Look for ``mu >= 0`` with ``mu @ M >= target`` componentwise.

    Feasible outcomes carry only ``mu`` (the slack part is dropped).
    """
    d = len(target)
    n = len(M)
    rows = [[row[k] for row in M] + [-int(i == k) for i in range(d)] for k in range(d)]
    out = lp_feasible(LpProblem.build(rows, target, [0] * (n + d), nvars=n + d))
    if isinstance(out, Feasible):
        return Feasible(out.point[:n])
    return out


def zero_in_pos_span(M: Sequence[Sequence[int]], d: int | None = None) -> LpOutcome:
    """Is ``0`` a strictly positive combination of the rows of ``M``?

    Strict positivity is encoded as ``lam >= 1``, which is equivalent because
    the solution set is a cone.  A feasible answer is returned as a coprime
    integer vector ``lam >= 1``.  With no rows the empty sum is ``0``.
    """
    n = len(M)
    if n == 0:
        return Feasible(())
    if d is None:
        d = len(M[0])
    out = lp_feasible(row_combination_problem(M, [0] * d, [1] * n))
    if isinstance(out, Feasible):
        return Feasible(primitive(out.point))
    return out


@dataclass(frozen=True)
class PositiveSpanResult:
    """Outcome of testing ``span_{R>0} rows == R^d``.

    ``axes`` maps ``(i, sign)`` to the LP outcome for ``lam >= 0,
    lam @ M == sign * e_i``.
    """

    full: bool
    kernel: LpOutcome
    axes: dict = field(default_factory=dict)

    def first_failure(self):
        """``None``, ``("kernel", certificate)`` or ``((i, sign), certificate)``."""
        if isinstance(self.kernel, Infeasible):
            return ("kernel", self.kernel.certificate)
        for key, out in self.axes.items():
            if isinstance(out, Infeasible):
                return (key, out.certificate)
        return None


def pos_span_is_full(M: Sequence[Sequence[int]], d: int) -> PositiveSpanResult:
    """A strictly positive kernel vector plus nonnegative solutions for every
    ``+-e_i`` together give every vector of ``R^d`` as a strictly positive
    combination."""
    kernel = zero_in_pos_span(M, d)
    axes = {}
    for i in range(d):
        for sign in (1, -1):
            target = [sign * int(k == i) for k in range(d)]
            axes[(i, sign)] = nonnegative_combination(M, target)
    full = isinstance(kernel, Feasible) and all(isinstance(o, Feasible) for o in axes.values())
    return PositiveSpanResult(full, kernel, axes)

