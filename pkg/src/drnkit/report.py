"""JSON and plain-text rendering of analysis results.

Reaction indices become 1-based here; everything upstream is 0-based.
Rationals are written as ``"p/q"`` strings, integers as JSON numbers.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import __version__
from .analysis import AnalysisReport, LcnWitness, SelfRecurrentPoint, SelfStartWitness
from .exactmath import Feasible, HnfResult, PositiveSpanResult
from .model import Drn
from .parser import format_reaction
from .reach import Budget
from .verdict import Truth, Verdict

SCHEMA_VERSION = 1


def num(a):
    if isinstance(a, Fraction):
        return a.numerator if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
    return a


def vec(v):
    return [num(a) for a in v]


def path1(p):
    return None if p is None else [j + 1 for j in p]


def axis_label(drn: Drn, key) -> dict:
    i, sign = key
    return {"species": drn.species[i], "sign": "+" if sign > 0 else "-"}


def _outcome(o):
    if isinstance(o, Feasible):
        return {"feasible": True, "solution": vec(o.point)}
    return {"feasible": False, "farkas": vec(o.certificate)}


def positive_span_json(drn: Drn, span: PositiveSpanResult) -> dict:
    out = {
        "full": span.full,
        "kernel": _outcome(span.kernel),
        "axes": [dict(axis_label(drn, key), **_outcome(o)) for key, o in span.axes.items()],
    }
    failure = span.first_failure()
    if failure is not None:
        where, cert = failure
        out["first_failure"] = {"kernel": True} if where == "kernel" else axis_label(drn, where)
        out["first_failure"]["farkas"] = vec(cert)
    return out


def hnf_json(drn: Drn, h: HnfResult | None) -> dict:
    if h is None:
        return {"rank": 0, "pivots": [], "lattice_index": None}
    return {
        "rank": h.rank,
        "pivot_columns": [c + 1 for c in h.pivot_columns],
        "pivots": list(h.pivots),
        "lattice_index": h.lattice_index(drn.d),
    }


def lcn_witness_json(drn: Drn, w: LcnWitness, verified: bool) -> dict:
    return {
        "kernel": list(w.kernel),
        "threshold": list(w.threshold),
        "axes": [
            dict(
                axis_label(drn, key),
                multiplicity=list(w.axis_multiplicities[key]),
                path=path1(w.axis_paths[key]),
            )
            for key in w.axis_paths
        ],
        "replay_verified": verified,
    }


def self_start_json(w: SelfStartWitness) -> dict:
    return {
        "sigma": path1(w.sigma),
        "cone_certificates": [vec(c) for c in w.cone_certificates],
        "start_path": path1(w.start_path),
        "start_point": None if w.start_point is None else list(w.start_point),
    }


def budget_json(b: Budget) -> dict:
    return {"max_states": b.max_states, "cap": b.cap}


def verdict_json(drn: Drn, name: str, v: Verdict) -> dict:
    ev = v.evidence
    out = {"verdict": v.value.value}
    if name == "lcn_irreducible":
        out["positive_span"] = positive_span_json(drn, ev["positive_span"])
        out["integer_span"] = hnf_json(drn, ev["hnf"])
        if "reason" in ev:
            out["reason"] = ev["reason"]
    elif name == "lcn_recurrent":
        if "kernel" in ev:
            out["kernel"] = list(ev["kernel"])
        else:
            out["farkas"] = vec(ev["farkas"])
    elif name in ("self_starting", "self_stopping"):
        if "witness" in ev:
            out["witness"] = self_start_json(ev["witness"])
        else:
            out["reason"] = ev["reason"]
    elif name == "irreducible":
        out["components"] = {k: t.value for k, t in ev.items()}
    elif name == "recurrent":
        out.update(recurrence_json(ev))
    return out


def recurrence_json(ev: dict) -> dict:
    out = {}
    route = ev.get("route")
    if route:
        out["route"] = route
    if route == "self_recurrent_point":
        w: SelfRecurrentPoint = ev["witness"]
        out["point"] = list(w.point)
        out["path_up"] = path1(w.path_up)
        out["path_down"] = path1(w.path_down)
    elif route == "undo_each_reaction":
        out["paths"] = {str(j + 1): path1(p) for j, p in ev["paths"].items()}
    elif route == "closed_reachable_set":
        out["reaction"] = ev["reaction"] + 1
        out["source"] = list(ev["source"])
        out["target"] = list(ev["target"])
        out["reachable_set_size"] = ev["reachable_set_size"]
        states = ev["reachable_set"]
        out["reachable_set"] = None if states is None else [list(s) for s in states]
    elif route == "implied_by_irreducibility":
        out["search"] = recurrence_json(ev["search"])
    elif route is None:
        out["budget"] = budget_json(ev["budget"])
        out["undecided_reactions"] = [j + 1 for j in ev["undecided_reactions"]]
    return out


def report_dict(report: AnalysisReport) -> dict:
    drn = report.drn
    props = {name: verdict_json(drn, name, v) for name, v in report.verdicts.items()}
    if report.witness is not None:
        props["lcn_irreducible"]["witness"] = lcn_witness_json(drn, report.witness, True)
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "drnkit", "version": __version__},
        "network": {
            "species": list(drn.species),
            "n": drn.n,
            "d": drn.d,
            "reactions": [format_reaction(drn, j) for j in range(drn.n)],
        },
        "budget": budget_json(report.budget),
        "verdicts": {name: v.value.value for name, v in report.verdicts.items()},
        "properties": props,
        "consistency_checks": list(report.consistency),
    }


def to_json(report: AnalysisReport) -> str:
    return json.dumps(report_dict(report), indent=2) + "\n"


_MARK = {Truth.TRUE: "yes", Truth.FALSE: "no", Truth.UNKNOWN: "unknown"}


def to_text(report: AnalysisReport) -> str:
    drn = report.drn
    lines = [
        f"network: {drn.n} reactions, {drn.d} species ({', '.join(drn.species)})",
        "",
    ]
    width = max(len(k) for k in report.verdicts)
    for name, v in report.verdicts.items():
        note = _short_note(drn, name, v)
        lines.append(f"  {name.ljust(width)}  {_MARK[v.value]:<7} {note}".rstrip())
    if report.witness is not None:
        lines += ["", f"LCN threshold M0 = {list(report.witness.threshold)}"]
    lines += ["", f"budget: {report.budget.max_states} states, cap {report.budget.cap} per species"]
    return "\n".join(lines) + "\n"


def _short_note(drn: Drn, name: str, v: Verdict) -> str:
    ev = v.evidence
    if name == "lcn_irreducible" and not v.is_true:
        return explain_lcn_failure(drn, v)
    if name == "lcn_recurrent" and v.is_true:
        return f"kernel {list(ev['kernel'])}"
    if name in ("self_starting", "self_stopping"):
        if "witness" in ev:
            return f"sigma {path1(ev['witness'].sigma)}"
        return ev["reason"]
    if name == "recurrent":
        route = ev.get("route")
        if route == "self_recurrent_point":
            return f"0 ->* {list(ev['witness'].point)} ->* 0"
        if route == "closed_reachable_set":
            return (
                f"reaction {ev['reaction'] + 1}: {list(ev['source'])} cannot reach "
                f"{list(ev['target'])} (closed reachable set of size {ev['reachable_set_size']})"
            )
        if route:
            return route.replace("_", " ")
        return f"undecided reactions {[j + 1 for j in ev['undecided_reactions']]}"
    return ""


def explain_lcn_failure(drn: Drn, v: Verdict) -> str:
    ev = v.evidence
    if ev.get("reason") == "positive_span":
        where, cert = ev["positive_span"].first_failure()
        if where == "kernel":
            axis = "no strictly positive kernel"
        else:
            lab = axis_label(drn, where)
            axis = f"failing axis {lab['sign']}{lab['species']}"
        return f"span_{{R>0}}V != R^d ({axis}, Farkas certificate {vec(cert)})"
    h = ev["hnf"]
    index = h.lattice_index(drn.d) if h is not None else None
    if index is None:
        rank = 0 if h is None else h.rank
        return f"integer span has rank {rank} < {drn.d}"
    return f"integer span has lattice index {index}"
