"""Text format for reaction networks (``.drn`` files).

One reaction per line::

    # comment
    species: A B C          # optional; pins dimension and column order
    0 -> 2 A                # 0 (or an empty side) is the empty complex
    A + B -> 0
    5A -> 4 A + 3 B
    A <-> B                 # expands to a forward and a backward row

Species are collected in first-appearance order unless a ``species:`` header
is given, in which case only declared species may be used.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .model import Drn, DrnError, new_drn

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<biarrow><->)
  | (?P<arrow>->)
  | (?P<plus>\+)
  | (?P<number>-?[0-9]+)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ReactionAst:
    reactants: tuple[tuple[int, str], ...]
    products: tuple[tuple[int, str], ...]
    reversible: bool
    line: int


def _tokenize(text: str, lineno: int, offset: int = 0):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", lineno, offset + pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), offset + pos + 1))
        pos = m.end()
    return tokens


def _parse_side(tokens, lineno, end_col):
    """Parse ``term (+ term)*`` where term is ``[coef] species`` or ``0``."""
    if not tokens:
        return ()
    if len(tokens) == 1 and tokens[0][0] == "number" and tokens[0][1] == "0":
        return ()
    terms = []
    i = 0
    while True:
        if i >= len(tokens):
            raise ParseError("expected a species term", lineno, end_col)
        kind, text, col = tokens[i]
        coef = 1
        if kind == "number":
            coef = int(text)
            if coef <= 0:
                raise ParseError(f"coefficient must be a positive integer, got {text}", lineno, col)
            i += 1
            if i >= len(tokens) or tokens[i][0] != "ident":
                where = tokens[i][2] if i < len(tokens) else end_col
                raise ParseError("expected a species name after coefficient", lineno, where)
            kind, text, col = tokens[i]
        if kind != "ident":
            raise ParseError(f"expected a species term, found {text!r}", lineno, col)
        terms.append((coef, text))
        i += 1
        if i == len(tokens):
            break
        kind, text, col = tokens[i]
        if kind != "plus":
            raise ParseError(f"expected '+' or end of side, found {text!r}", lineno, col)
        if i + 1 == len(tokens):
            raise ParseError("dangling '+' with no term after it", lineno, col)
        i += 1
    return tuple(terms)


def parse_reactions(text: str) -> tuple[list[str] | None, list[ReactionAst]]:
    """Parse the text into an optional species header and reaction ASTs."""
    header: list[str] | None = None
    reactions: list[ReactionAst] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        if stripped.startswith("species:"):
            if header is not None:
                raise ParseError("duplicate species header", lineno, indent + 1)
            if reactions:
                raise ParseError("species header must precede reactions", lineno, indent + 1)
            body_start = indent + len("species:")
            header = []
            for m in re.finditer(r"\S+", line[body_start:]):
                name = m.group()
                col = body_start + m.start() + 1
                if not _IDENT.fullmatch(name):
                    raise ParseError(f"invalid species name {name!r}", lineno, col)
                if name in header:
                    raise ParseError(f"species {name!r} declared twice", lineno, col)
                header.append(name)
            continue
        tokens = _tokenize(line, lineno)
        arrows = [i for i, t in enumerate(tokens) if t[0] in ("arrow", "biarrow")]
        if not arrows:
            raise ParseError("expected '->' or '<->'", lineno, len(line.rstrip()) + 1)
        if len(arrows) > 1:
            raise ParseError("more than one arrow", lineno, tokens[arrows[1]][2])
        a = arrows[0]
        arrow_col = tokens[a][2]
        lhs = _parse_side(tokens[:a], lineno, arrow_col)
        rhs = _parse_side(tokens[a + 1:], lineno, len(line.rstrip()) + 1)
        reactions.append(ReactionAst(lhs, rhs, tokens[a][0] == "biarrow", lineno))
    return header, reactions


def _complex_vector(terms, index, d):
    vec = [0] * d
    for coef, name in terms:
        vec[index[name]] += coef
    return vec


def parse_network(text: str) -> Drn:
    header, reactions = parse_reactions(text)
    if header is not None:
        species = list(header)
        for r in reactions:
            for _, name in r.reactants + r.products:
                if name not in species:
                    raise ParseError(
                        f"species {name!r} not declared in the species header", r.line, 1
                    )
    else:
        species = []
        for r in reactions:
            for _, name in r.reactants + r.products:
                if name not in species:
                    species.append(name)
    if not species:
        raise ParseError("network declares no species", 1, 1)
    index = {name: k for k, name in enumerate(species)}
    d = len(species)
    drifts, origins = [], []
    for r in reactions:
        lhs = _complex_vector(r.reactants, index, d)
        rhs = _complex_vector(r.products, index, d)
        drifts.append([b - a for a, b in zip(lhs, rhs)])
        origins.append(lhs)
        if r.reversible:
            drifts.append([a - b for a, b in zip(lhs, rhs)])
            origins.append(rhs)
    try:
        drn = new_drn(species, drifts, origins)
    except DrnError as exc:
        raise AssertionError(f"parser produced an invalid network: {exc}") from exc
    return drn


def format_complex(drn: Drn, vec) -> str:
    terms = []
    for name, c in zip(drn.species, vec):
        if c == 1:
            terms.append(name)
        elif c:
            terms.append(f"{c} {name}")
    return " + ".join(terms) if terms else "0"


def format_reaction(drn: Drn, j: int) -> str:
    return f"{format_complex(drn, drn.origins[j])} -> {format_complex(drn, drn.products(j))}"


def serialize_network(drn: Drn) -> str:
    """Render one line per row; a ``species:`` header is emitted only when
    first-appearance order would not reproduce the species order."""
    lines = [format_reaction(drn, j) for j in range(drn.n)]
    appearance = []
    for j in range(drn.n):
        for vec in (drn.origins[j], drn.products(j)):
            for name, c in zip(drn.species, vec):
                if c and name not in appearance:
                    appearance.append(name)
    if tuple(appearance) != drn.species:
        lines.insert(0, "species: " + " ".join(drn.species))
    return "\n".join(lines) + "\n"


def load_network(path) -> Drn:
    with open(path, encoding="utf-8") as fh:
        return parse_network(fh.read())
