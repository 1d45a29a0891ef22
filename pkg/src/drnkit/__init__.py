"""Exact analysis of irreducibility and recurrence for discrete reaction networks."""

__version__ = "0.1.0"

from .model import Drn, DrnError, apply, applicable, find_ordering, inverse, new_drn
from .parser import ParseError, load_network, parse_network, serialize_network
from .reach import Budget, mutual_reach, reachable, reachable_set
from .verdict import Truth, Verdict
from .analysis import (
    analyze,
    check_recurrence,
    is_irreducible,
    is_lcn_irreducible,
    is_lcn_recurrent,
    is_self_starting,
    is_self_stopping,
    is_weakly_reversible,
    lcn_irreducibility_witness,
)

__all__ = [
    "Budget",
    "Drn",
    "DrnError",
    "ParseError",
    "Truth",
    "Verdict",
    "analyze",
    "applicable",
    "apply",
    "check_recurrence",
    "find_ordering",
    "inverse",
    "is_irreducible",
    "is_lcn_irreducible",
    "is_lcn_recurrent",
    "is_self_starting",
    "is_self_stopping",
    "is_weakly_reversible",
    "lcn_irreducibility_witness",
    "load_network",
    "mutual_reach",
    "new_drn",
    "parse_network",
    "reachable",
    "reachable_set",
    "serialize_network",
]
