from hypothesis import given, settings

from drnkit.analysis import (
    analyze,
    check_recurrence,
    find_self_recurrent_point,
    is_irreducible,
    is_lcn_irreducible,
    is_lcn_recurrent,
    is_self_starting,
    is_self_stopping,
    is_weakly_reversible,
    lcn_irreducibility_witness,
    verify_lcn_witness,
    verify_self_start_witness,
)
from drnkit.exactmath import Infeasible, nonnegative_combination
from drnkit.model import find_ordering, inverse, new_drn, replay
from drnkit.parser import parse_network
from drnkit.reach import Budget, explore
from drnkit.verdict import Truth
from strategies import drns

SMALL = Budget(max_states=5_000, cap=10)


def test_lcn_irreducible_examples(example_a, example_b, circadian):
    a = is_lcn_irreducible(example_a)
    assert a.is_false and a.evidence["reason"] == "integer_span"
    assert is_lcn_irreducible(example_b).is_true
    assert is_lcn_irreducible(circadian).is_true


def test_witness_example_b(example_b):
    w = lcn_irreducibility_witness(example_b)
    assert verify_lcn_witness(example_b, w)
    for (i, s), path in w.axis_paths.items():
        end = replay(example_b, w.threshold, path)
        assert end == tuple(t + s * (k == i) for k, t in enumerate(w.threshold))


def test_witness_absent_for_example_a(example_a):
    assert lcn_irreducibility_witness(example_a) is None


def test_witness_one_species_birth_death():
    drn = parse_network("0 -> A\nA -> 0")
    w = lcn_irreducibility_witness(drn)
    assert w.threshold == (1,)
    assert verify_lcn_witness(drn, w)


def test_tampered_witness_is_rejected(example_b):
    w = lcn_irreducibility_witness(example_b)
    no_kernel = type(w)((0,) * example_b.n, w.axis_multiplicities, w.threshold, w.axis_paths)
    assert not verify_lcn_witness(example_b, no_kernel)


def test_threshold_is_tight_for_its_paths(example_b, circadian):
    for drn in (example_b, circadian):
        w = lcn_irreducibility_witness(drn)
        for k, t in enumerate(w.threshold):
            if t > 0:
                lowered = tuple(a - (i == k) for i, a in enumerate(w.threshold))
                bad = type(w)(w.kernel, w.axis_multiplicities, lowered, w.axis_paths)
                assert not verify_lcn_witness(drn, bad)


def test_witness_multiplicities_admit_an_ordering(example_b, circadian):
    for drn in (example_b, circadian):
        w = lcn_irreducibility_witness(drn)
        for lam in w.axis_multiplicities.values():
            assert find_ordering(drn, lam, w.threshold) is not None


def test_lcn_recurrent_examples(example_a, phospho):
    a = is_lcn_recurrent(example_a)
    assert a.is_true and a.evidence["kernel"] == (2, 3, 1)
    p = is_lcn_recurrent(phospho)
    assert p.is_true and min(p.evidence["kernel"]) >= 1
    assert is_lcn_recurrent(parse_network("0 -> A")).is_false


def test_self_starting_examples(example_a, example_b, circadian):
    a = is_self_starting(example_a)
    assert a.is_true and a.evidence["witness"].sigma == (0, 2)
    assert verify_self_start_witness(example_a, a.evidence["witness"])
    c = is_self_starting(circadian)
    assert c.is_false and c.evidence["reason"] == "no reaction has a zero origin"
    assert is_self_starting(example_b).is_true


def test_self_starting_uses_dominated_origins():
    # (1,0,0) is not a nonnegative combination of (1,1,0), but it is dominated
    # by one, and 0 -> (1,1,0) -> (2,2,0) -> (1,2,1) is strictly positive
    drn = parse_network("0 -> A + B\nA -> C")
    assert isinstance(nonnegative_combination([drn.drifts[0]], drn.origins[1]), Infeasible)
    v = is_self_starting(drn)
    assert v.is_true
    assert replay(drn, drn.zero(), (0, 0, 1)) == (1, 2, 1)


def test_self_starting_false_when_a_species_never_appears():
    drn = parse_network("0 -> 2 A\nA + B -> 3 A + 2 B")
    assert is_self_starting(drn).is_false
    x = explore(drn, drn.zero(), Budget(cap=12))
    assert not any(min(s) >= 1 for s in x.order)


def test_self_stopping_examples(example_a, example_b):
    assert is_self_stopping(example_a).is_true
    assert is_self_stopping(example_b).is_true
    assert is_self_stopping(parse_network("0 -> A")).is_false


def test_irreducible_examples(example_a, example_b, circadian):
    assert is_irreducible(example_b).is_true
    assert is_irreducible(example_a).is_false
    c = is_irreducible(circadian)
    assert c.is_false and c.evidence["self_starting"] is Truth.FALSE


def test_weak_reversibility_examples():
    assert is_weakly_reversible(parse_network("X -> Y\nY -> Z\nZ -> X"))
    assert is_weakly_reversible(parse_network("A <-> B"))
    assert not is_weakly_reversible(parse_network("0 -> 2 A"))


def test_recurrence_examples(example_a, circadian):
    a = check_recurrence(example_a, Budget(cap=12))
    assert a.is_true and a.evidence["route"] == "self_recurrent_point"
    w = a.evidence["witness"]
    assert replay(example_a, (0, 0), w.path_up) == w.point
    assert replay(example_a, w.point, w.path_down) == (0, 0)
    c = check_recurrence(circadian)
    assert c.is_false and c.evidence["reachable_set"] == [circadian.zero()]
    cycle = check_recurrence(parse_network("X -> Y\nY -> Z\nZ -> X"))
    assert cycle.evidence == {"route": "weak_reversibility"}


def test_six_six_is_a_self_recurrent_point(example_a):
    # the first positive point in BFS order is a smaller one, but (6,6) works too
    assert find_self_recurrent_point(example_a, Budget(cap=12)).point == (5, 3)
    up = (0, 0, 0, 0, 2, 2)
    assert replay(example_a, (0, 0), up) == (6, 6)
    assert replay(example_a, (6, 6), (1,) * 6) == (0, 0)


def test_recurrence_unknown_when_budget_is_tiny():
    # A -> 0 is never undone, but no finite closure proves it
    drn = parse_network("0 -> A\nA -> 2 A")
    v = check_recurrence(drn, Budget(max_states=3, cap=2))
    assert v.value is Truth.UNKNOWN
    assert v.evidence["budget"] == Budget(max_states=3, cap=2)


def test_analyze_examples(example_a, example_b):
    verdicts = {k: v.value for k, v in analyze(example_a, Budget(cap=12)).verdicts.items()}
    assert verdicts == {
        "lcn_irreducible": Truth.FALSE,
        "irreducible": Truth.FALSE,
        "lcn_recurrent": Truth.TRUE,
        "recurrent": Truth.TRUE,
        "self_starting": Truth.TRUE,
        "self_stopping": Truth.TRUE,
        "weakly_reversible": Truth.FALSE,
    }
    rb = analyze(example_b)
    assert rb.verdicts["irreducible"].is_true and rb.witness is not None


def test_analyze_phospho(phospho):
    r = analyze(phospho)
    assert r.verdicts["lcn_irreducible"].is_false
    assert r.verdicts["lcn_recurrent"].is_true
    assert r.verdicts["recurrent"].is_false


@settings(max_examples=150, deadline=None)
@given(drns(max_d=2, max_n=3))
def test_self_stopping_is_dual(drn):
    assert is_self_stopping(drn).value is is_self_starting(inverse(drn)).value


@settings(max_examples=150, deadline=None)
@given(drns(max_d=2, min_n=1, max_n=3))
def test_self_starting_agrees_with_bfs(drn):
    v = is_self_starting(drn)
    x = explore(drn, drn.zero(), Budget(max_states=20_000, cap=16))
    found = any(min(s) >= 1 for s in x.order)
    if v.is_true:
        w = v.evidence["witness"]
        assert verify_self_start_witness(drn, w)
        if w.start_path is not None:
            assert min(replay(drn, drn.zero(), w.start_path)) >= 1
    elif x.closed or found:
        assert not found


@settings(max_examples=150, deadline=None)
@given(drns(max_d=2, max_n=3))
def test_witnesses_verify(drn):
    w = lcn_irreducibility_witness(drn)
    if w is not None:
        assert verify_lcn_witness(drn, w)


@settings(max_examples=100, deadline=None)
@given(drns(max_d=2, max_n=3))
def test_implication_lattice(drn):
    r = analyze(drn, SMALL)
    v = r.verdicts
    if v["lcn_irreducible"].is_true:
        assert v["lcn_recurrent"].is_true
    if v["irreducible"].is_true:
        assert v["recurrent"].is_true
    if v["weakly_reversible"].is_true:
        assert v["recurrent"].is_true


def test_threshold_window_mutual_reach_on_sampled_irreducible_networks():
    import random

    from drnkit.model import add

    rng = random.Random(11)
    found = 0
    while found < 60:
        drifts, origins = [], []
        for _ in range(3):
            o = [rng.randint(0, 3) for _ in range(2)]
            drifts.append([rng.randint(max(-3, -a), 3) for a in o])
            origins.append(o)
        drn = new_drn("AB", drifts, origins)
        w = lcn_irreducibility_witness(drn)
        if w is None:
            continue
        found += 1
        window = [add(w.threshold, (a, b)) for a in range(4) for b in range(4)]
        excursion = 0
        for path in w.axis_paths.values():
            x = drn.zero()
            for j in path:
                x = add(x, drn.drifts[j])
                excursion = max(excursion, *x)
        budget = Budget(max_states=1_000_000, cap=max(w.threshold) + 3 + excursion)
        for x in window:
            seen = explore(drn, x, budget).parent
            assert all(y in seen for y in window), (drn, x)
