"""Bounded explicit-state reachability.

Breadth-first search over states ``x >= 0`` with a per-species population cap
and a limit on the number of discovered states.  A negative answer is only
claimed when the forward-reachable set was closed without any successor being
suppressed by the cap, so "not reachable" is a proof, never a guess.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .model import Drn, DrnError, Vector
from .verdict import Truth


@dataclass(frozen=True)
class Budget:
    max_states: int = 100_000
    cap: int = 64


class Outcome(enum.Enum):
    REACHED = "reached"
    NOT_REACHABLE = "not_reachable_proven"
    EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class ReachResult:
    outcome: Outcome
    path: tuple[int, ...] | None
    states_explored: int
    frontier_snapshot: tuple[Vector, ...] = ()

    @property
    def reached(self) -> bool:
        return self.outcome is Outcome.REACHED


@dataclass
class Exploration:
    """Result of a forward closure: discovery order, BFS tree and status."""

    source: Vector
    order: list[Vector] = field(default_factory=list)
    parent: dict[Vector, tuple[Vector, int] | None] = field(default_factory=dict)
    clipped: bool = False
    exhausted: bool = False
    edges: list[tuple[Vector, Vector, int]] = field(default_factory=list)

    @property
    def closed(self) -> bool:
        """The reachable set is exactly ``order``: nothing was cut off."""
        return not self.clipped and not self.exhausted

    def path_to(self, target: Vector) -> tuple[int, ...]:
        steps = []
        x = target
        while self.parent[x] is not None:
            x, j = self.parent[x]
            steps.append(j)
        return tuple(reversed(steps))


def _check(drn: Drn, x: Sequence[int]) -> Vector:
    if len(x) != drn.d:
        raise DrnError(f"state has dimension {len(x)}, network has {drn.d}")
    if any(a < 0 for a in x):
        raise DrnError(f"state {tuple(x)} has a negative component")
    return tuple(x)


def _bfs(drn: Drn, source: Vector, budget: Budget, stop_at: Vector | None = None,
         record_edges: bool = False) -> Exploration:
    ex = Exploration(source)
    ex.order.append(source)
    ex.parent[source] = None
    if stop_at is not None and source == stop_at:
        return ex
    cap = budget.cap
    # sparse supports: (species, required) and (species, change)
    needs = [[(k, a) for k, a in enumerate(o) if a] for o in drn.origins]
    moves = [[(k, a) for k, a in enumerate(v) if a] for v in drn.drifts]
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for j in range(drn.n):
            if any(x[k] < a for k, a in needs[j]):
                continue
            y = list(x)
            over = False
            for k, a in moves[j]:
                y[k] += a
                if y[k] > cap:
                    over = True
            if over:
                ex.clipped = True
                continue
            y = tuple(y)
            if record_edges:
                ex.edges.append((x, y, j))
            if y in ex.parent:
                continue
            if len(ex.order) >= budget.max_states:
                ex.exhausted = True
                return ex
            ex.parent[y] = (x, j)
            ex.order.append(y)
            if stop_at is not None and y == stop_at:
                return ex
            queue.append(y)
    return ex


def explore(drn: Drn, source: Sequence[int], budget: Budget = Budget(),
            record_edges: bool = False) -> Exploration:
    """Forward closure from ``source`` under the budget."""
    return _bfs(drn, _check(drn, source), budget, record_edges=record_edges)


def reachable(drn: Drn, source: Sequence[int], target: Sequence[int],
              budget: Budget = Budget()) -> ReachResult:
    """Shortest path (in reaction count) from ``source`` to ``target``.

    Ties are broken by ascending reaction index, so results are reproducible.
    """
    src = _check(drn, source)
    dst = _check(drn, target)
    ex = _bfs(drn, src, budget, stop_at=dst)
    explored = len(ex.order)
    if dst in ex.parent:
        return ReachResult(Outcome.REACHED, ex.path_to(dst), explored)
    if ex.closed:
        return ReachResult(Outcome.NOT_REACHABLE, None, explored)
    return ReachResult(Outcome.EXHAUSTED, None, explored, tuple(ex.order[-8:]))


@dataclass(frozen=True)
class ReachableSet:
    states: frozenset[Vector]
    order: tuple[Vector, ...]
    closed: bool


def reachable_set(drn: Drn, source: Sequence[int], budget: Budget = Budget()) -> ReachableSet:
    ex = explore(drn, source, budget)
    return ReachableSet(frozenset(ex.order), tuple(ex.order), ex.closed)


def mutual_reach(drn: Drn, a: Sequence[int], b: Sequence[int],
                 budget: Budget = Budget()) -> Truth:
    """``a ->* b`` and ``b ->* a``; UNKNOWN when a budget ran out first."""
    if tuple(a) == tuple(b):
        _check(drn, a)
        return Truth.TRUE
    results = []
    for s, t in ((a, b), (b, a)):
        r = reachable(drn, s, t, budget)
        if r.outcome is Outcome.NOT_REACHABLE:
            return Truth.FALSE
        results.append(r)
    if all(r.reached for r in results):
        return Truth.TRUE
    return Truth.UNKNOWN


def format_state(x: Sequence[int]) -> str:
    return "(" + ",".join(str(a) for a in x) + ")"


def dump_graph(drn: Drn, source: Sequence[int], budget: Budget = Budget()) -> str:
    """Explored transition system, one ``state -> state [reaction j]`` per line
    with 1-based reaction numbers."""
    ex = explore(drn, source, budget, record_edges=True)
    lines = [f"{format_state(x)} -> {format_state(y)} [reaction {j + 1}]" for x, y, j in ex.edges]
    return "\n".join(lines) + ("\n" if lines else "")
