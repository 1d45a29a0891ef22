"""Discrete reaction networks: data model and transition semantics.

A network with ``n`` reactions over ``d`` species is a pair of integer
matrices: ``drifts`` (row ``j`` is the net population change of reaction
``j``) and ``origins`` (row ``j`` is the minimal population required to fire
it).  A state is a tuple of ``d`` nonnegative integers.

Reaction indices are 0-based everywhere in this module.  Human-facing output
(reports, CLI) adds 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


class DrnError(ValueError):
    """Raised when a network or a state violates the model constraints."""


@dataclass(frozen=True)
class Drn:
    species: tuple[str, ...]
    drifts: Matrix
    origins: Matrix

    def __post_init__(self):
        _validate(self.species, self.drifts, self.origins)

    @property
    def n(self) -> int:
        return len(self.drifts)

    @property
    def d(self) -> int:
        return len(self.species)

    def products(self, j: int) -> Vector:
        return add(self.origins[j], self.drifts[j])

    def index_of(self, name: str) -> int:
        try:
            return self.species.index(name)
        except ValueError:
            raise DrnError(f"unknown species {name!r}") from None

    def unit(self, i: int, sign: int = 1) -> Vector:
        return tuple(sign if k == i else 0 for k in range(self.d))

    def zero(self) -> Vector:
        return (0,) * self.d


def _validate(species, drifts, origins):
    if len(species) < 1:
        raise DrnError("a network needs at least one species")
    seen = set()
    for k, name in enumerate(species):
        if not name:
            raise DrnError(f"species {k + 1} has an empty name")
        if name in seen:
            raise DrnError(f"duplicate species name {name!r} (column {k + 1})")
        seen.add(name)
    if len(drifts) != len(origins):
        raise DrnError(
            f"drifts have {len(drifts)} rows but origins have {len(origins)}"
        )
    d = len(species)
    for j, (v, o) in enumerate(zip(drifts, origins)):
        if len(v) != d or len(o) != d:
            raise DrnError(f"reaction {j + 1}: expected {d} columns")
        for k in range(d):
            if o[k] < 0:
                raise DrnError(
                    f"reaction {j + 1}: negative origin entry {o[k]} "
                    f"for species {species[k]!r} (column {k + 1})"
                )
            if o[k] + v[k] < 0:
                raise DrnError(
                    f"reaction {j + 1}: origin + drift is {o[k] + v[k]} "
                    f"for species {species[k]!r} (column {k + 1}); "
                    "a reaction must be applicable from its own origin"
                )


def new_drn(
    species: Iterable[str],
    drifts: Iterable[Iterable[int]],
    origins: Iterable[Iterable[int]],
) -> Drn:
    """Build and validate a network, coercing rows to tuples of ints."""
    return Drn(
        tuple(species),
        tuple(tuple(int(a) for a in row) for row in drifts),
        tuple(tuple(int(a) for a in row) for row in origins),
    )


def inverse(drn: Drn) -> Drn:
    """Return the network running every reaction backwards: ``(-V, O + V)``."""
    return Drn(
        drn.species,
        tuple(tuple(-a for a in v) for v in drn.drifts),
        tuple(add(o, v) for o, v in zip(drn.origins, drn.drifts)),
    )


# --- vector helpers -----------------------------------------------------------

def add(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def scale(c: int, x: Sequence[int]) -> Vector:
    return tuple(c * a for a in x)


def dominates(x: Sequence[int], y: Sequence[int]) -> bool:
    """Componentwise ``x >= y``."""
    return all(a >= b for a, b in zip(x, y))


def combination(coeffs: Sequence, rows: Sequence[Sequence]) -> tuple:
    """Row combination ``sum_j coeffs[j] * rows[j]`` (works for Fractions too)."""
    if not rows:
        return ()
    width = len(rows[0])
    out = [0] * width
    for c, row in zip(coeffs, rows):
        if c:
            for k in range(width):
                out[k] += c * row[k]
    return tuple(out)


def lowerpoint(points: Iterable[Sequence[int]]) -> Vector:
    """Componentwise minimum of a nonempty collection of vectors."""
    pts = [tuple(p) for p in points]
    if not pts:
        raise ValueError("lowerpoint of an empty set")
    width = len(pts[0])
    if any(len(p) != width for p in pts):
        raise ValueError("lowerpoint: vectors of different dimension")
    return tuple(min(p[k] for p in pts) for k in range(width))


# --- transitions --------------------------------------------------------------

def _check_state(drn: Drn, x: Sequence[int]) -> None:
    if len(x) != drn.d:
        raise DrnError(f"state has dimension {len(x)}, network has {drn.d}")


def applicable(drn: Drn, x: Sequence[int]) -> set[int]:
    """Indices of the reactions whose origin is dominated by ``x``."""
    _check_state(drn, x)
    return {j for j, o in enumerate(drn.origins) if dominates(x, o)}


def apply(drn: Drn, x: Sequence[int], j: int) -> Vector:
    """Fire reaction ``j`` at state ``x``."""
    _check_state(drn, x)
    if not 0 <= j < drn.n:
        raise DrnError(f"reaction index {j + 1} out of range 1..{drn.n}")
    o = drn.origins[j]
    for k in range(drn.d):
        if x[k] < o[k]:
            raise DrnError(
                f"reaction {j + 1} not applicable at {tuple(x)}: species "
                f"{drn.species[k]!r} has {x[k]}, needs {o[k]}"
            )
    return add(x, drn.drifts[j])


def replay(drn: Drn, x: Sequence[int], path: Iterable[int]) -> Vector:
    """Apply a sequence of reactions from ``x``; raises if any step is invalid."""
    state = tuple(x)
    for j in path:
        state = apply(drn, state, j)
    return state


def apply_path_trace(drn: Drn, x: Sequence[int], path: Sequence[int]) -> list[Vector]:
    """All partial sums ``x + V[pi(1)] + ... + V[pi(k)]`` for ``k = 0..len(path)``.

    No positivity or applicability is enforced; the trace may leave the
    nonnegative orthant.
    """
    out = [tuple(x)]
    cur = tuple(x)
    for j in path:
        cur = add(cur, drn.drifts[j])
        out.append(cur)
    return out


def trace_lowerpoint(drn: Drn, x: Sequence[int], path: Sequence[int]) -> Vector:
    return lowerpoint(apply_path_trace(drn, x, path))


def path_counts(n: int, path: Iterable[int]) -> Vector:
    counts = [0] * n
    for j in path:
        counts[j] += 1
    return tuple(counts)


def find_ordering(
    drn: Drn, multiplicity: Sequence[int], floor: Sequence[int]
) -> list[int] | None:
    """Find a path using reaction ``j`` exactly ``multiplicity[j]`` times that
    is applicable from ``floor``.

    Depth-first search trying reactions in ascending index order.  The current
    point is determined by the remaining counts, so dead ends are memoised on
    that vector.  Returns the lexicographically first applicable ordering, or
    ``None`` when none exists.
    """
    if len(multiplicity) != drn.n:
        raise DrnError(f"multiplicity has length {len(multiplicity)}, expected {drn.n}")
    if any(c < 0 for c in multiplicity):
        raise DrnError("multiplicity entries must be nonnegative")
    remaining = list(multiplicity)
    total = sum(remaining)
    dead: set[Vector] = set()
    path: list[int] = []
    points = [tuple(floor)]
    # stack[k] is the next candidate index to try at depth k
    stack = [0]
    while stack:
        if len(path) == total:
            return path
        start = stack[-1]
        here = points[-1]
        chosen = None
        for j in range(start, drn.n):
            if remaining[j] and dominates(here, drn.origins[j]):
                remaining[j] -= 1
                key = tuple(remaining)
                if key in dead:
                    remaining[j] += 1
                    continue
                chosen = j
                break
        if chosen is None:
            dead.add(tuple(remaining))
            stack.pop()
            if not path:
                return None
            j = path.pop()
            points.pop()
            remaining[j] += 1
            stack[-1] = j + 1
            continue
        stack[-1] = chosen
        path.append(chosen)
        points.append(add(here, drn.drifts[chosen]))
        stack.append(0)
    return None
