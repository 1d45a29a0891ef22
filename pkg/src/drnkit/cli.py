"""Command-line front end.

Exit codes: ``analyze`` returns 0 whatever the verdicts, 2 on input errors and
3 on an internal inconsistency.  ``check`` and ``reach`` return 0 / 1 / 4 for
true / false / unknown.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .analysis import (
    InconsistencyError,
    analyze,
    check_recurrence,
    is_irreducible,
    is_lcn_irreducible,
    is_lcn_recurrent,
    is_self_starting,
    is_self_stopping,
    is_weakly_reversible,
    lcn_irreducibility_witness,
    verify_lcn_witness,
)
from .model import Drn, replay
from .parser import ParseError, format_reaction, load_network
from .reach import Budget, Outcome, dump_graph, reachable
from .report import explain_lcn_failure, path1, to_json, to_text
from .verdict import Truth

EXIT_FOR = {Truth.TRUE: 0, Truth.FALSE: 1, Truth.UNKNOWN: 4}
INPUT_ERROR = 2
INTERNAL_ERROR = 3

PROPERTY_CHECKS = {
    "lcn-irreducible": lambda drn, b: is_lcn_irreducible(drn).value,
    "irreducible": lambda drn, b: is_irreducible(drn).value,
    "lcn-recurrent": lambda drn, b: is_lcn_recurrent(drn).value,
    "recurrent": lambda drn, b: _recurrent(drn, b),
    "self-starting": lambda drn, b: is_self_starting(drn).value,
    "self-stopping": lambda drn, b: is_self_stopping(drn).value,
    "weakly-reversible": lambda drn, b: Truth.of(is_weakly_reversible(drn)),
}


def _recurrent(drn, budget):
    value = check_recurrence(drn, budget).value
    if value is Truth.UNKNOWN and is_irreducible(drn).is_true:
        return Truth.TRUE
    return value


class InputError(Exception):
    pass


def _load(path) -> Drn:
    try:
        return load_network(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    except ParseError as exc:
        raise InputError(f"{path}:{exc.line}:{exc.column}: {exc.message}") from exc


def parse_state(drn: Drn, text: str) -> tuple[int, ...]:
    """``1,0,2`` in species order, or ``NAME=count`` pairs (others zero)."""
    text = text.strip()
    if "=" in text:
        state = [0] * drn.d
        for item in text.split(","):
            name, _, value = item.partition("=")
            try:
                state[drn.species.index(name.strip())] = int(value)
            except ValueError:
                raise InputError(f"bad state component {item!r}") from None
        return tuple(state)
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise InputError(f"bad state {text!r}: expected comma-separated integers") from None
    if parts == [0] and drn.d > 1:
        parts = [0] * drn.d
    if len(parts) != drn.d:
        raise InputError(f"state {text!r} has {len(parts)} entries, network has {drn.d} species")
    if any(p < 0 for p in parts):
        raise InputError(f"state {text!r} has a negative entry")
    return tuple(parts)


def _budget(args) -> Budget:
    return Budget(max_states=args.budget, cap=args.cap)


def cmd_analyze(args) -> int:
    drn = _load(args.file)
    try:
        report = analyze(drn, _budget(args))
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return INTERNAL_ERROR
    sys.stdout.write(to_json(report) if args.json else to_text(report))
    return 0


def cmd_check(args) -> int:
    drn = _load(args.file)
    try:
        value = PROPERTY_CHECKS[args.property](drn, _budget(args))
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return INTERNAL_ERROR
    print(f"{args.property}: {value.value}")
    return EXIT_FOR[value]


def cmd_reach(args) -> int:
    drn = _load(args.file)
    src = parse_state(drn, args.source)
    dst = parse_state(drn, args.target)
    budget = _budget(args)
    if args.dump_graph:
        with open(args.dump_graph, "w", encoding="utf-8") as fh:
            fh.write(dump_graph(drn, src, budget))
    result = reachable(drn, src, dst, budget)
    if result.outcome is Outcome.REACHED:
        steps = ",".join(f"r{j + 1}" for j in result.path)
        print(f"path ({len(result.path)} steps): {steps}" if result.path else "path (0 steps): empty")
        return 0
    if result.outcome is Outcome.NOT_REACHABLE:
        print(f"not reachable (proven): closed reachable set of {result.states_explored} states")
        return 1
    print(f"unknown: budget exhausted after {result.states_explored} states (cap {budget.cap})")
    return 4


def cmd_witness(args) -> int:
    drn = _load(args.file)
    verdict = is_lcn_irreducible(drn)
    if not verdict.is_true:
        print(f"not LCN irreducible: {explain_lcn_failure(drn, verdict)}")
        return 1
    w = lcn_irreducibility_witness(drn, verdict)
    ok = verify_lcn_witness(drn, w)
    print(f"kernel lambda = {list(w.kernel)}")
    print(f"threshold M0 = {list(w.threshold)}")
    for (i, sign), path in w.axis_paths.items():
        label = ("+" if sign > 0 else "-") + drn.species[i]
        end = replay(drn, w.threshold, path)
        print(f"  {label}: multiplicity {list(w.axis_multiplicities[(i, sign)])}")
        print(f"    path {','.join(f'r{j}' for j in path1(path))} -> {list(end)}")
    print(f"replay: {'verified' if ok else 'FAILED'}")
    return 0 if ok else INTERNAL_ERROR


def cmd_show(args) -> int:
    drn = _load(args.file)
    for j in range(drn.n):
        print(f"r{j + 1}: {format_reaction(drn, j)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="drnkit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"drnkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_budget(p):
        p.add_argument("--budget", type=int, default=Budget.max_states, help="max explored states")
        p.add_argument("--cap", type=int, default=Budget.cap, help="per-species population cap")

    p = sub.add_parser("analyze", help="decide every property and print a report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    with_budget(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="decide one property; exit 0/1/4 for true/false/unknown")
    p.add_argument("file")
    p.add_argument("--property", required=True, choices=sorted(PROPERTY_CHECKS))
    with_budget(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reach", help="bounded reachability between two states")
    p.add_argument("file")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--dump-graph", metavar="PATH", help="write the explored transition system")
    with_budget(p)
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("witness", help="print and replay an LCN irreducibility witness")
    p.add_argument("file")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("show", help="list the reactions with their 1-based numbers")
    p.add_argument("file")
    p.set_defaults(func=cmd_show)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
