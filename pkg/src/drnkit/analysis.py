"""Decision procedures for irreducibility and recurrence, with witnesses.

LCN ("large copy number") properties are decided exactly: positive real spans
by exact LP and the integer span by Hermite normal form.  Self-starting and
self-stopping are decided by a search over reaction sequences backed by LP.
Full recurrence is only semi-decidable and goes through bounded reachability,
so it may come back UNKNOWN.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

import networkx as nx

from .exactmath import (
    Feasible,
    HnfResult,
    PositiveSpanResult,
    dominating_combination,
    hnf,
    pos_span_is_full,
    solve_integer_system,
    zero_in_pos_span,
)
from .model import (
    Drn,
    DrnError,
    Vector,
    add,
    combination,
    dominates,
    inverse,
    path_counts,
    replay,
    scale,
)
from .reach import Budget, Outcome, explore, reachable, reachable_set
from .verdict import Truth, Verdict

# longest self-starting path we are willing to materialise
MAX_START_PATH = 100_000


class InconsistencyError(RuntimeError):
    """Verdicts contradict a proven implication: an implementation bug."""


# --- LCN irreducibility -----------------------------------------------------------

def is_lcn_irreducible(drn: Drn) -> Verdict:
    """Strictly positive real span is ``R^d`` and integer span is ``Z^d``."""
    span = pos_span_is_full(drn.drifts, drn.d)
    lattice = hnf(drn.drifts, drn.d) if drn.n else None
    integer_full = lattice is not None and lattice.rank == drn.d and all(p == 1 for p in lattice.pivots)
    evidence = {"positive_span": span, "hnf": lattice}
    if not span.full:
        evidence["reason"] = "positive_span"
    elif not integer_full:
        evidence["reason"] = "integer_span"
    return Verdict(Truth.of(span.full and integer_full), evidence)


@dataclass(frozen=True)
class LcnWitness:
    """Constructive threshold for LCN irreducibility.

    From any state ``x >= threshold`` the path ``axis_paths[(i, s)]`` is
    applicable and moves ``x`` to ``x + s * e_i``.  ``axis_multiplicities``
    count the reactions of each path; ``kernel`` is a strictly positive
    integer combination of drifts summing to zero.
    """

    kernel: tuple[int, ...]
    axis_multiplicities: dict
    threshold: Vector
    axis_paths: dict


def _greedy_ordering(drn: Drn, counts) -> list[int]:
    """Order a multiset of reactions keeping the running sum as high as possible.

    At every step take the reaction whose application maximises the smallest
    coordinate of the partial sum (then the total), lowest index on ties.
    """
    remaining = list(counts)
    point = drn.zero()
    path = []
    for _ in range(sum(remaining)):
        best = None
        for j in range(drn.n):
            if remaining[j]:
                nxt = add(point, drn.drifts[j])
                key = (min(nxt), sum(nxt))
                if best is None or key > best[0]:
                    best = (key, j, nxt)
        _, j, point = best
        remaining[j] -= 1
        path.append(j)
    return path


def lcn_irreducibility_witness(drn: Drn, verdict: Verdict | None = None) -> LcnWitness | None:
    verdict = verdict or is_lcn_irreducible(drn)
    if not verdict.is_true:
        return None
    span: PositiveSpanResult = verdict.evidence["positive_span"]
    lattice: HnfResult = verdict.evidence["hnf"]
    kernel = span.kernel.point
    multiplicities = {}
    paths = {}
    for i in range(drn.d):
        for sign in (1, -1):
            mu = solve_integer_system(drn.drifts, drn.unit(i, sign), lattice)
            # lift onto the nonnegative orthant by adding a multiple of the kernel
            beta = max([0] + [ceil(-m / k) for m, k in zip(mu, kernel) if m < 0])
            lam = add(scale(beta, kernel), mu)
            multiplicities[(i, sign)] = lam
            paths[(i, sign)] = tuple(_greedy_ordering(drn, lam))
    # each step needs threshold + partial sum >= origin of the reaction fired
    threshold = [0] * drn.d
    for path in paths.values():
        point = drn.zero()
        for j in path:
            o = drn.origins[j]
            for k in range(drn.d):
                threshold[k] = max(threshold[k], o[k] - point[k])
            point = add(point, drn.drifts[j])
    witness = LcnWitness(kernel, multiplicities, tuple(threshold), paths)
    if not verify_lcn_witness(drn, witness):
        raise InconsistencyError("constructed LCN witness failed replay")
    return witness


def verify_lcn_witness(drn: Drn, w: LcnWitness) -> bool:
    """Re-check every identity of the witness by substitution and replay."""
    if len(w.kernel) != drn.n or any(k < 1 for k in w.kernel):
        return False
    if combination(w.kernel, drn.drifts) != drn.zero():
        return False
    if any(t < 0 for t in w.threshold):
        return False
    for i in range(drn.d):
        for sign in (1, -1):
            lam = w.axis_multiplicities.get((i, sign))
            path = w.axis_paths.get((i, sign))
            if lam is None or path is None or any(c < 0 for c in lam):
                return False
            target = drn.unit(i, sign)
            if combination(lam, drn.drifts) != target:
                return False
            if path_counts(drn.n, path) != tuple(lam):
                return False
            try:
                end = replay(drn, w.threshold, path)
            except DrnError:
                return False
            if end != add(w.threshold, target):
                return False
    return True


# --- LCN recurrence ---------------------------------------------------------------

def is_lcn_recurrent(drn: Drn) -> Verdict:
    """Zero is a strictly positive combination of drifts."""
    out = zero_in_pos_span(drn.drifts, drn.d)
    if isinstance(out, Feasible):
        return Verdict(Truth.TRUE, {"kernel": out.point})
    return Verdict(Truth.FALSE, {"farkas": out.certificate})


# --- self-starting / self-stopping ---------------------------------------------

@dataclass(frozen=True)
class SelfStartWitness:
    """Reaction sequence ``sigma`` (0-based, length ``d``) that bootstraps a
    strictly positive population from the empty state.

    ``cone_certificates[k - 1]`` is a vector ``mu >= 0`` with
    ``mu @ drifts[sigma[:k]] >= origins[sigma[k]]`` for ``k = 1..d-1``.
    ``start_path`` replays from zero to ``start_point``, which is strictly
    positive; it is ``None`` when too long to materialise.
    """

    sigma: tuple[int, ...]
    cone_certificates: tuple[tuple[Fraction, ...], ...]
    start_path: tuple[int, ...] | None = None
    start_point: Vector | None = None


def _positive_support(v) -> frozenset[int]:
    return frozenset(k for k, a in enumerate(v) if a >= 1)


def _search_sigma(drn: Drn):
    d, n = drn.d, drn.n
    everything = frozenset(range(d))
    reachable_axes = frozenset().union(*(_positive_support(v) for v in drn.drifts)) if n else frozenset()
    if reachable_axes != everything:
        return None
    cone_cache: dict = {}
    dead: set = set()

    def admissible(prefix, j):
        order = tuple(sorted(set(prefix)))
        key = (order, j)
        if key not in cone_cache:
            out = dominating_combination([drn.drifts[p] for p in order], drn.origins[j])
            cone_cache[key] = out.point if isinstance(out, Feasible) else None
        point = cone_cache[key]
        if point is None:
            return None
        # one coefficient per prefix position; a repeated reaction keeps its weight once
        coeff = dict(zip(order, point))
        return tuple(coeff.pop(p, Fraction(0)) for p in prefix)

    def dfs(prefix, covered, certs):
        if len(prefix) == d:
            return (tuple(prefix), tuple(certs)) if covered == everything else None
        state = (covered, len(prefix))
        if state in dead:
            return None
        for j in range(n):
            if not prefix:
                if any(drn.origins[j]):
                    continue
                cert = None
            else:
                new_axes = _positive_support(drn.drifts[j]) - covered
                if covered != everything and not new_axes:
                    continue
                cert = admissible(prefix, j)
                if cert is None:
                    continue
            found = dfs(
                prefix + [j],
                covered | _positive_support(drn.drifts[j]),
                certs + ([cert] if prefix else []),
            )
            if found:
                return found
        dead.add(state)
        return None

    return dfs([], frozenset(), [])


def _start_path(drn: Drn, sigma) -> tuple[tuple[int, ...], Vector] | None:
    """Follow the inductive construction: repeat the current path ``m`` times
    (reaching ``m * x``) then fire the next reaction of ``sigma``."""
    path = [sigma[0]]
    x = drn.drifts[sigma[0]]
    covered = _positive_support(x)
    for j in sigma[1:]:
        o, v = drn.origins[j], drn.drifts[j]
        m = 1
        for k in range(drn.d):
            if o[k] > 0:
                m = max(m, -(-o[k] // x[k]))
            if k in covered and v[k] < 1:
                m = max(m, -(-(1 - v[k]) // x[k]))
        if len(path) * m + 1 > MAX_START_PATH:
            return None
        path = path * m + [j]
        x = add(scale(m, x), v)
        covered = covered | _positive_support(v)
    return tuple(path), x


def verify_self_start_witness(drn: Drn, w: SelfStartWitness) -> bool:
    sigma = w.sigma
    if len(sigma) != drn.d or any(not 0 <= j < drn.n for j in sigma):
        return False
    if any(drn.origins[sigma[0]]):
        return False
    if len(w.cone_certificates) != drn.d - 1:
        return False
    for k in range(1, drn.d):
        mu = w.cone_certificates[k - 1]
        if len(mu) != k or any(Fraction(a) < 0 for a in mu):
            return False
        reached = combination(mu, [drn.drifts[p] for p in sigma[:k]])
        if not dominates(reached, drn.origins[sigma[k]]):
            return False
    covered = frozenset().union(*(_positive_support(drn.drifts[j]) for j in sigma))
    if covered != frozenset(range(drn.d)):
        return False
    if w.start_path is not None:
        try:
            end = replay(drn, drn.zero(), w.start_path)
        except DrnError:
            return False
        if end != w.start_point or any(a < 1 for a in end):
            return False
    return True


def is_self_starting(drn: Drn) -> Verdict:
    """Some strictly positive state is reachable from the empty state."""
    found = _search_sigma(drn)
    if found is None:
        if not any(not any(o) for o in drn.origins):
            reason = "no reaction has a zero origin"
        else:
            reason = "no admissible reaction sequence covers every species"
        return Verdict(Truth.FALSE, {"reason": reason})
    sigma, certs = found
    built = _start_path(drn, sigma)
    path, point = built if built else (None, None)
    witness = SelfStartWitness(sigma, certs, path, point)
    if not verify_self_start_witness(drn, witness):
        raise InconsistencyError("self-starting witness failed verification")
    return Verdict(Truth.TRUE, {"witness": witness})


def is_self_stopping(drn: Drn) -> Verdict:
    """The empty state is reachable from some strictly positive state."""
    return is_self_starting(inverse(drn))


def self_stop_path(drn: Drn, verdict: Verdict) -> tuple[Vector, tuple[int, ...]] | None:
    """Turn a self-stopping verdict into ``(x, path)`` with ``x ->* 0`` in ``drn``."""
    w: SelfStartWitness = verdict.evidence.get("witness")
    if w is None or w.start_path is None:
        return None
    return w.start_point, tuple(reversed(w.start_path))


def is_irreducible(drn: Drn, lcn: Verdict | None = None, start: Verdict | None = None,
                   stop: Verdict | None = None) -> Verdict:
    lcn = lcn or is_lcn_irreducible(drn)
    start = start or is_self_starting(drn)
    stop = stop or is_self_stopping(drn)
    value = lcn.is_true and start.is_true and stop.is_true
    return Verdict(
        Truth.of(value),
        {"lcn_irreducible": lcn.value, "self_starting": start.value, "self_stopping": stop.value},
    )


# --- recurrence --------------------------------------------------------------------

def complex_graph(drn: Drn) -> nx.DiGraph:
    g = nx.DiGraph()
    for j in range(drn.n):
        g.add_edge(drn.origins[j], drn.products(j), reaction=j)
    return g


def is_weakly_reversible(drn: Drn) -> bool:
    """Every reaction edge of the complex graph lies inside one strongly
    connected component."""
    g = complex_graph(drn)
    component = {}
    for idx, comp in enumerate(nx.strongly_connected_components(g)):
        for node in comp:
            component[node] = idx
    return all(
        component[drn.origins[j]] == component[drn.products(j)] for j in range(drn.n)
    )


@dataclass(frozen=True)
class SelfRecurrentPoint:
    point: Vector
    path_up: tuple[int, ...]
    path_down: tuple[int, ...]


def find_self_recurrent_point(drn: Drn, budget: Budget) -> SelfRecurrentPoint | None:
    """First strictly positive ``x`` in BFS order from zero with ``x ->* 0``.

    ``x ->* 0`` is tested as ``0 ->* x`` in the inverse network, so one
    backward closure serves every candidate.
    """
    zero = drn.zero()
    forward = explore(drn, zero, budget)
    candidates = [x for x in forward.order if all(a >= 1 for a in x)]
    if not candidates:
        return None
    backward = explore(inverse(drn), zero, budget)
    for x in candidates:
        if x in backward.parent:
            up = forward.path_to(x)
            down = tuple(reversed(backward.path_to(x)))
            if replay(drn, zero, up) != x or replay(drn, x, down) != zero:
                raise InconsistencyError("self-recurrent point failed replay")
            return SelfRecurrentPoint(x, up, down)
    return None


# sets larger than this are reported by size only
MAX_REPORTED_SET = 1000


def check_recurrence(drn: Drn, budget: Budget = Budget()) -> Verdict:
    """Semi-decide full recurrence.

    TRUE via weak reversibility, via a point ``x > 0`` with ``0 ->* x ->* 0``
    on an LCN recurrent network, or by undoing every reaction from its
    products.  FALSE only when some reaction's products have a closed finite
    reachable set that misses its origin.  UNKNOWN otherwise.
    """
    if is_weakly_reversible(drn):
        return Verdict(Truth.TRUE, {"route": "weak_reversibility"})
    lcn = is_lcn_recurrent(drn)
    if lcn.is_true:
        hit = find_self_recurrent_point(drn, budget)
        if hit is not None:
            return Verdict(
                Truth.TRUE,
                {"route": "self_recurrent_point", "kernel": lcn.evidence["kernel"], "witness": hit},
            )
    undo_paths = {}
    undecided = []
    for j in range(drn.n):
        src, dst = drn.products(j), drn.origins[j]
        r = reachable(drn, src, dst, budget)
        if r.outcome is Outcome.REACHED:
            undo_paths[j] = r.path
        elif r.outcome is Outcome.NOT_REACHABLE:
            closure = reachable_set(drn, src, budget)
            states = sorted(closure.states) if len(closure.states) <= MAX_REPORTED_SET else None
            return Verdict(
                Truth.FALSE,
                {
                    "route": "closed_reachable_set",
                    "reaction": j,
                    "source": src,
                    "target": dst,
                    "reachable_set_size": len(closure.states),
                    "reachable_set": states,
                },
            )
        else:
            undecided.append(j)
    if not undecided:
        return Verdict(Truth.TRUE, {"route": "undo_each_reaction", "paths": undo_paths})
    return Verdict(
        Truth.UNKNOWN,
        {"budget": budget, "undecided_reactions": tuple(undecided), "undo_paths": undo_paths},
    )


# --- full report -------------------------------------------------------------------

PROPERTIES = (
    "lcn_irreducible",
    "irreducible",
    "lcn_recurrent",
    "recurrent",
    "self_starting",
    "self_stopping",
    "weakly_reversible",
)


@dataclass
class AnalysisReport:
    drn: Drn
    budget: Budget
    verdicts: dict[str, Verdict]
    witness: LcnWitness | None = None
    consistency: list[str] = field(default_factory=list)


def analyze(drn: Drn, budget: Budget = Budget()) -> AnalysisReport:
    lcn_irr = is_lcn_irreducible(drn)
    lcn_rec = is_lcn_recurrent(drn)
    start = is_self_starting(drn)
    stop = is_self_stopping(drn)
    irr = is_irreducible(drn, lcn_irr, start, stop)
    wr = is_weakly_reversible(drn)
    rec = check_recurrence(drn, budget)
    witness = lcn_irreducibility_witness(drn, lcn_irr) if lcn_irr.is_true else None

    checks = []
    if lcn_irr.is_true:
        if not lcn_rec.is_true:
            raise InconsistencyError("LCN irreducible but not LCN recurrent")
        checks.append("lcn_irreducible => lcn_recurrent")
    if irr.is_true:
        if rec.is_false:
            raise InconsistencyError("irreducible but recurrence refuted")
        if rec.value is Truth.UNKNOWN:
            rec = Verdict(Truth.TRUE, {"route": "implied_by_irreducibility", "search": rec.evidence})
        checks.append("irreducible => recurrent")
    if wr and not rec.is_true:
        raise InconsistencyError("weakly reversible but recurrence not established")
    if irr.is_true and not lcn_irr.is_true:
        raise InconsistencyError("irreducible but not LCN irreducible")

    verdicts = {
        "lcn_irreducible": lcn_irr,
        "irreducible": irr,
        "lcn_recurrent": lcn_rec,
        "recurrent": rec,
        "self_starting": start,
        "self_stopping": stop,
        "weakly_reversible": Verdict(Truth.of(wr), {}),
    }
    return AnalysisReport(drn, budget, verdicts, witness, checks)
