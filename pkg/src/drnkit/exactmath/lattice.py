"""Integer row lattices: Hermite normal form and integer linear systems."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence


@dataclass(frozen=True)
class HnfResult:
    """``U @ M == H`` with ``U`` unimodular and ``H`` in row Hermite form."""

    H: tuple[tuple[int, ...], ...]
    U: tuple[tuple[int, ...], ...]
    rank: int
    pivot_columns: tuple[int, ...]

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(self.H[r][c] for r, c in enumerate(self.pivot_columns))

    def lattice_index(self, d: int) -> int | None:
        """Index of the row lattice in ``Z^d``; ``None`` when it has lower rank."""
        if self.rank < d:
            return None
        return prod(self.pivots)


def _ncols(M, ncols):
    if ncols is not None:
        return ncols
    if not M:
        raise ValueError("column count of an empty matrix must be given")
    return len(M[0])


def hnf(M: Sequence[Sequence[int]], ncols: int | None = None) -> HnfResult:
    """Row-style Hermite normal form by Euclidean row reduction.

    Nonzero rows come first, pivots are positive and move strictly right, and
    entries above a pivot lie in ``[0, pivot)``.
    """
    ncols = _ncols(M, ncols)
    m = len(M)
    H = [list(map(int, row)) for row in M]
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap(a, b):
        H[a], H[b] = H[b], H[a]
        U[a], U[b] = U[b], U[a]

    def addmul(dst, src, q):
        # row[dst] -= q * row[src]
        if q:
            H[dst] = [x - q * y for x, y in zip(H[dst], H[src])]
            U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    r = 0
    pivot_columns = []
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(H[i][c]), i))
            if p != r:
                swap(p, r)
            clean = True
            for i in range(r + 1, m):
                if H[i][c]:
                    addmul(i, r, H[i][c] // H[r][c])
                    if H[i][c]:
                        clean = False
            if clean:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            addmul(i, r, H[i][c] // H[r][c])
        pivot_columns.append(c)
        r += 1
    return HnfResult(
        tuple(map(tuple, H)), tuple(map(tuple, U)), r, tuple(pivot_columns)
    )


def is_hermite_normal_form(H: Sequence[Sequence[int]]) -> bool:
    """Shape predicate for row Hermite normal form."""
    last = -1
    seen_zero = False
    pivots = []
    for row in H:
        nz = [k for k, a in enumerate(row) if a != 0]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        c = nz[0]
        if c <= last or row[c] <= 0:
            return False
        pivots.append((len(pivots), c))
        last = c
    for r, c in pivots:
        p = H[r][c]
        for above in range(r):
            if not 0 <= H[above][c] < p:
                return False
    return True


def integer_span_full(M: Sequence[Sequence[int]], d: int) -> bool:
    """Whether the rows of ``M`` generate all of ``Z^d``."""
    if not M:
        return d == 0
    res = hnf(M, d)
    return res.rank == d and all(p == 1 for p in res.pivots)


def solve_integer_system(
    M: Sequence[Sequence[int]], target: Sequence[int], hnf_result: HnfResult | None = None
) -> tuple[int, ...] | None:
    """Integer ``lam`` with ``lam @ M == target``, or ``None`` if ``target`` is
    outside the integer row span."""
    d = len(target)
    n = len(M)
    if n == 0:
        return () if all(t == 0 for t in target) else None
    res = hnf_result or hnf(M, d)
    H, U = res.H, res.U
    nu = [0] * n
    for k, c in enumerate(res.pivot_columns):
        acc = target[c] - sum(nu[i] * H[i][c] for i in range(k))
        q, rem = divmod(acc, H[k][c])
        if rem:
            return None
        nu[k] = q
    for c in range(d):
        if sum(nu[i] * H[i][c] for i in range(res.rank)) != target[c]:
            return None
    lam = tuple(sum(nu[k] * U[k][j] for k in range(res.rank)) for j in range(n))
    return lam
