import itertools
from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from drnkit.exactmath import (
    Feasible,
    Infeasible,
    LpProblem,
    check_farkas,
    check_primal,
    hnf,
    integer_span_full,
    is_hermite_normal_form,
    lp_feasible,
    pos_span_is_full,
    primitive,
    solve_integer_system,
    zero_in_pos_span,
)
from drnkit.exactmath.spans import row_combination_problem

VA = [[2, 0], [-1, -1], [-1, 3]]
VB = [[2, 0], [-1, -1], [-1, 2]]


def matrices(max_rows, max_cols, lo=-20, hi=20, min_rows=1):
    return st.integers(1, max_cols).flatmap(
        lambda d: st.lists(
            st.lists(st.integers(lo, hi), min_size=d, max_size=d),
            min_size=min_rows,
            max_size=max_rows,
        )
    )


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def vecmat(lam, M):
    return tuple(sum(l * row[k] for l, row in zip(lam, M)) for k in range(len(M[0])))


# --- LP ---------------------------------------------------------------------

def test_kernel_of_example_a():
    out = zero_in_pos_span(VA)
    assert isinstance(out, Feasible)
    assert out.point == (2, 3, 1)


def test_kernel_of_single_positive_drift_is_infeasible():
    problem = row_combination_problem([[1, 0]], [0, 0], [1])
    out = lp_feasible(problem)
    assert isinstance(out, Infeasible)
    assert check_farkas(problem, out.certificate)


def test_empty_system_is_feasible():
    out = lp_feasible(LpProblem.build([], [], []))
    assert isinstance(out, Feasible) and out.point == ()
    assert zero_in_pos_span([]) == Feasible(())


def test_zero_in_pos_span_small_cases():
    assert isinstance(zero_in_pos_span([[1, 1]]), Infeasible)


def test_lp_with_lower_bounds_and_fractions():
    problem = LpProblem.build([[2, 3]], [Fraction(7, 2)], [Fraction(1, 4), 0])
    out = lp_feasible(problem)
    assert isinstance(out, Feasible)
    assert check_primal(problem, out.point)


def test_primitive():
    assert primitive([Fraction(1, 2), Fraction(3, 4), 1]) == (2, 3, 4)
    assert primitive([2, 4, 6]) == (1, 2, 3)


@settings(max_examples=300, deadline=None)
@given(matrices(6, 6, -9, 9), st.data())
def test_lp_outcomes_recheck(rows, data):
    n = len(rows[0])
    b = data.draw(st.lists(st.integers(-9, 9), min_size=len(rows), max_size=len(rows)))
    lower = data.draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
    problem = LpProblem.build(rows, b, lower)
    out = lp_feasible(problem)
    if isinstance(out, Feasible):
        assert check_primal(problem, out.point)
    else:
        assert check_farkas(problem, out.certificate)


def test_pos_span_examples():
    assert pos_span_is_full(VA, 2).full
    assert pos_span_is_full(VB, 2).full
    res = pos_span_is_full([[1, 0], [0, 1]], 2)
    assert not res.full
    assert isinstance(res.axes[(0, -1)], Infeasible)


# --- HNF --------------------------------------------------------------------

def test_hnf_identity():
    res = hnf([[1, 0], [0, 1]])
    assert res.H == ((1, 0), (0, 1)) and res.U == ((1, 0), (0, 1)) and res.rank == 2


def test_hnf_examples():
    a = hnf(VA)
    assert a.rank == 2 and a.lattice_index(2) == 2
    b = hnf(VB)
    assert b.rank == 2 and b.pivots == (1, 1)


def test_integer_span_full_examples():
    assert not integer_span_full(VA, 2)
    assert integer_span_full(VB, 2)
    assert integer_span_full([[1, 0], [0, 1]], 2)
    assert not integer_span_full([], 2)
    assert integer_span_full([], 0)


def _check_hnf(M):
    res = hnf(M)
    assert [list(r) for r in matmul(res.U, M)] == [list(r) for r in res.H]
    assert abs(sympy.Matrix(res.U).det()) == 1
    assert is_hermite_normal_form(res.H)
    assert res.rank == sympy.Matrix(M).rank()
    return res


@settings(max_examples=300, deadline=None)
@given(matrices(8, 8))
def test_hnf_invariants(M):
    _check_hnf(M)


def test_hnf_is_canonical_under_row_operations():
    M = [[4, 6, 2], [2, 3, 7], [6, 9, 9]]
    U = [[1, 2, 0], [0, 1, 0], [3, 1, 1]]
    assert hnf(M).H == hnf(matmul(U, M)).H


def test_shape_predicate_rejects_bad_forms():
    assert not is_hermite_normal_form([[0, 1], [1, 0]])
    assert not is_hermite_normal_form([[1, 2], [0, 2]])
    assert not is_hermite_normal_form([[0, 0], [1, 0]])
    assert not is_hermite_normal_form([[-1, 0]])
    assert is_hermite_normal_form([[2, 1, 0], [0, 3, 0], [0, 0, 0]])


# --- integer systems ----------------------------------------------------------

def test_solve_integer_system_examples():
    lam = solve_integer_system(VB, (1, 0))
    assert lam is not None and vecmat(lam, VB) == (1, 0)
    assert solve_integer_system(VA, (1, 0)) is None
    lam = solve_integer_system(VA, (0, 0))
    assert vecmat(lam, VA) == (0, 0)


@settings(max_examples=300, deadline=None)
@given(matrices(3, 3, -4, 4), st.data())
def test_solve_integer_system_against_brute_force(M, data):
    d = len(M[0])
    target = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=d, max_size=d)))
    lam = solve_integer_system(M, target)
    if lam is not None:
        assert vecmat(lam, M) == target
    else:
        box = range(-6, 7)
        assert all(vecmat(c, M) != target for c in itertools.product(box, repeat=len(M)))


@settings(max_examples=300, deadline=None)
@given(matrices(3, 3, -4, 4))
def test_zero_in_pos_span_against_brute_force(M):
    out = zero_in_pos_span(M)
    brute = any(
        all(v == 0 for v in vecmat(c, M))
        for c in itertools.product(range(1, 9), repeat=len(M))
    )
    if isinstance(out, Feasible):
        assert min(out.point) >= 1 and all(v == 0 for v in vecmat(out.point, M))
    else:
        assert not brute
        assert check_farkas(row_combination_problem(M, [0] * len(M[0]), [1] * len(M)), out.certificate)
