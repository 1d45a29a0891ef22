"""Exact phase-1 simplex over the rationals.

Problems have the form ``A x = b, x >= lower`` and only feasibility is asked.
Every answer comes with a certificate that can be re-checked by substitution:
a primal point, or a Farkas vector ``y`` with ``y A <= 0`` and
``y (b - A lower) > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Sequence


def _frac_row(row) -> tuple[Fraction, ...]:
    return tuple(Fraction(a) for a in row)


@dataclass(frozen=True)
class LpProblem:
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    nvars: int = field(default=-1)

    def __post_init__(self):
        nvars = self.nvars if self.nvars >= 0 else (len(self.matrix[0]) if self.matrix else len(self.lower))
        object.__setattr__(self, "nvars", nvars)
        if len(self.rhs) != len(self.matrix):
            raise ValueError("rhs length does not match the number of constraints")
        if any(len(row) != nvars for row in self.matrix):
            raise ValueError("constraint rows have inconsistent width")
        if len(self.lower) != nvars:
            raise ValueError("lower bounds length does not match the number of variables")

    @classmethod
    def build(cls, matrix: Sequence[Sequence], rhs: Sequence, lower: Sequence | None = None,
              nvars: int | None = None) -> "LpProblem":
        if nvars is None:
            nvars = len(matrix[0]) if matrix else (len(lower) if lower is not None else 0)
        if lower is None:
            lower = [0] * nvars
        return cls(
            tuple(_frac_row(r) for r in matrix),
            _frac_row(rhs),
            _frac_row(lower),
            nvars,
        )

    @property
    def nconstraints(self) -> int:
        return len(self.matrix)

    def shifted_rhs(self) -> tuple[Fraction, ...]:
        return tuple(
            b - sum(a * l for a, l in zip(row, self.lower))
            for row, b in zip(self.matrix, self.rhs)
        )


@dataclass(frozen=True)
class Feasible:
    point: tuple

    feasible = True


@dataclass(frozen=True)
class Infeasible:
    certificate: tuple

    feasible = False


LpOutcome = Feasible | Infeasible


def check_primal(problem: LpProblem, x: Sequence) -> bool:
    if len(x) != problem.nvars:
        return False
    if any(Fraction(a) < l for a, l in zip(x, problem.lower)):
        return False
    return all(
        sum(a * Fraction(v) for a, v in zip(row, x)) == b
        for row, b in zip(problem.matrix, problem.rhs)
    )


def check_farkas(problem: LpProblem, y: Sequence) -> bool:
    """True iff ``y`` proves that no ``x >= lower`` solves ``A x = b``."""
    if len(y) != problem.nconstraints:
        return False
    y = [Fraction(a) for a in y]
    for k in range(problem.nvars):
        if sum(y[i] * problem.matrix[i][k] for i in range(len(y))) > 0:
            return False
    return sum(a * b for a, b in zip(y, problem.shifted_rhs())) > 0


def primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Positive rescaling of a rational vector to coprime integers."""
    den = 1
    for a in vec:
        den = lcm(den, Fraction(a).denominator)
    ints = [int(Fraction(a) * den) for a in vec]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g > 1:
        ints = [a // g for a in ints]
    return tuple(ints)


class CyclingError(RuntimeError):
    """The simplex exceeded the number of distinct bases: a bug, never expected."""


def lp_feasible(problem: LpProblem) -> LpOutcome:
    """Decide feasibility with a phase-1 tableau simplex and Bland's rule."""
    m, n = problem.nconstraints, problem.nvars
    rhs = list(problem.shifted_rhs())
    signs = [1 if b >= 0 else -1 for b in rhs]
    # columns 0..n-1 are the shifted variables z = x - lower, n..n+m-1 artificials
    tab = []
    for i in range(m):
        s = signs[i]
        row = [s * a for a in problem.matrix[i]] + [Fraction(int(k == i)) for k in range(m)]
        row.append(s * rhs[i])
        tab.append(row)
    cost = [Fraction(0)] * n + [Fraction(1)] * m
    basis = [n + i for i in range(m)]
    width = n + m
    limit = comb(n + m, m)
    iterations = 0
    while True:
        reduced = [
            cost[j] - sum(cost[basis[i]] * tab[i][j] for i in range(m))
            for j in range(width)
        ]
        entering = next((j for j in range(width) if reduced[j] < 0), None)
        if entering is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = tab[i][entering]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise AssertionError("phase-1 objective is bounded below; ratio test cannot fail")
        _pivot(tab, leave, entering)
        basis[leave] = entering
        iterations += 1
        if iterations > limit:
            raise CyclingError(f"simplex exceeded {limit} pivots")

    objective = sum(cost[basis[i]] * tab[i][-1] for i in range(m))
    if objective == 0:
        z = [Fraction(0)] * n
        for i, b in enumerate(basis):
            if b < n:
                z[b] = tab[i][-1]
        point = tuple(l + v for l, v in zip(problem.lower, z))
        assert check_primal(problem, point), "simplex produced an invalid primal point"
        return Feasible(point)
    # dual of the optimal phase-1 basis; artificial columns hold B^-1
    y = [
        signs[k] * sum(cost[basis[i]] * tab[i][n + k] for i in range(m))
        for k in range(m)
    ]
    cert = primitive(y)
    assert check_farkas(problem, cert), "simplex produced an invalid Farkas certificate"
    return Infeasible(cert)


def _pivot(tab, r, c):
    prow = tab[r]
    p = prow[c]
    if p != 1:
        prow[:] = [a / p for a in prow]
    for i, row in enumerate(tab):
        if i != r:
            f = row[c]
            if f:
                row[:] = [a - f * b for a, b in zip(row, prow)]
