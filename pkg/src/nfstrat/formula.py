"""Formulas of the one-sorted language of set theory (``in`` and ``=``).

The grammar, lowest precedence first::

    formula   := quant | iff
    quant     := ("all" | "ex") VAR [":" "V"] "." formula
    iff       := imp { "<->" imp }          left-assoc
    imp       := disj { "->" disj }         right-assoc
    disj      := conj { ("|" | "or") conj }
    conj      := neg  { ("&" | "and") neg }
    neg       := ("~" | "not") neg | atom
    atom      := VAR ("in" | "=") VAR | "(" formula ")"

Only occurrences inside atoms are variable occurrences; a quantifier binder
is not, and the ``:V`` bound is metadata.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Union

KEYWORDS = frozenset({"all", "ex", "in", "not", "and", "or", "V"})


class AtomKind(str, Enum):
    MEMBER = "in"
    EQUAL = "="


class Side(str, Enum):
    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class Atom:
    kind: AtomKind
    left: str
    right: str


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Quantifier:
    kind: str  # "all" | "ex"
    var: str
    bounded_in_V: bool
    body: "Formula"


Formula = Union[Atom, Not, And, Or, Implies, Iff, Quantifier]
Binary = (And, Or, Implies, Iff)


@dataclass(frozen=True)
class OccRef:
    atom_position: int
    side: Side
    var: str


@dataclass(frozen=True)
class AtomOccurrence:
    position: int
    kind: AtomKind
    left_occ: OccRef
    right_occ: OccRef


@dataclass(frozen=True)
class VarGraph:
    """Undirected multigraph: one edge per atom occurrence, self-loops kept."""

    nodes: frozenset
    edges: tuple  # ((u, v), ...) in atom order

    def __len__(self) -> int:
        return len(self.edges)


# --------------------------------------------------------------------- errors


class FormulaSyntaxError(ValueError):
    def __init__(self, position: int, expected: str, found: str | None = None, message: str | None = None):
        self.position = position
        self.expected = expected
        self.found = found
        if message is None:
            got = "end of input" if found is None else repr(found)
            message = f"at position {position}: expected {expected}, found {got}"
        super().__init__(message)


class ReservedWordError(FormulaSyntaxError):
    def __init__(self, position: int, word: str):
        super().__init__(
            position, "variable", word, f"at position {position}: {word!r} is a reserved word, not a variable"
        )


# -------------------------------------------------------------------- lexing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<sym><->|->|[&|~().:=])|(?P<word>[A-Za-z_][A-Za-z0-9_]*))"
)


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise FormulaSyntaxError(bad, "a token", text[bad])
        tok = m.group("sym") or m.group("word")
        tokens.append((tok, m.start("sym") if m.group("sym") else m.start("word")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def where(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def expect(self, *options: str) -> str:
        tok = self.peek()
        if tok not in options:
            raise FormulaSyntaxError(self.where(), " or ".join(repr(o) for o in options), tok)
        self.i += 1
        return tok

    def var(self) -> str:
        tok = self.peek()
        if tok is None or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            raise FormulaSyntaxError(self.where(), "variable", tok)
        if tok in KEYWORDS:
            raise ReservedWordError(self.where(), tok)
        self.i += 1
        return tok

    def formula(self) -> Formula:
        if self.peek() in ("all", "ex"):
            kind = self.expect("all", "ex")
            v = self.var()
            bounded = False
            if self.peek() == ":":
                self.i += 1
                self.expect("V")
                bounded = True
            self.expect(".")
            return Quantifier(kind, v, bounded, self.formula())
        return self.iff()

    def iff(self) -> Formula:
        node = self.imp()
        while self.peek() == "<->":
            self.i += 1
            node = Iff(node, self.imp())
        return node

    def imp(self) -> Formula:
        left = self.disj()
        if self.peek() == "->":
            self.i += 1
            return Implies(left, self.imp())
        return left

    def disj(self) -> Formula:
        node = self.conj()
        while self.peek() in ("|", "or"):
            self.i += 1
            node = Or(node, self.conj())
        return node

    def conj(self) -> Formula:
        node = self.neg()
        while self.peek() in ("&", "and"):
            self.i += 1
            node = And(node, self.neg())
        return node

    def neg(self) -> Formula:
        if self.peek() in ("~", "not"):
            self.i += 1
            return Not(self.neg())
        return self.atom()

    def atom(self) -> Formula:
        if self.peek() == "(":
            self.i += 1
            inner = self.formula()
            self.expect(")")
            return inner
        left = self.var()
        rel = self.expect("in", "=")
        right = self.var()
        return Atom(AtomKind(rel), left, right)


def parse(text: str) -> Formula:
    """Parse ``text``; raises :class:`FormulaSyntaxError` with a character offset."""
    p = _Parser(text)
    if not p.tokens:
        raise FormulaSyntaxError(0, "formula", None)
    f = p.formula()
    if p.peek() is not None:
        raise FormulaSyntaxError(p.where(), "end of input", p.peek())
    return f


# ------------------------------------------------------------------ rendering

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Atom: 6}
_OPS = {Iff: "<->", Implies: "->", Or: "|", And: "&"}


def _prec(f: Formula) -> int:
    return 0 if isinstance(f, Quantifier) else _PREC[type(f)]


def render(f: Formula, occurrence=None) -> str:
    """Render with the fewest parentheses that still re-parse to ``f``.

    ``occurrence(position, side, var)`` may rewrite each variable occurrence
    inside an atom; binders are printed as-is.
    """
    counter = iter(range(1 << 62))
    return _render(f, occurrence, counter)


def _render(f: Formula, occurrence, counter) -> str:
    if isinstance(f, Atom):
        if occurrence is None:
            left, right = f.left, f.right
        else:
            pos = next(counter)
            left = occurrence(pos, Side.LEFT, f.left)
            right = occurrence(pos, Side.RIGHT, f.right)
        return f"{left} {f.kind.value} {right}"
    if isinstance(f, Quantifier):
        bound = ":V" if f.bounded_in_V else ""
        return f"{f.kind} {f.var}{bound}. {_render(f.body, occurrence, counter)}"
    if isinstance(f, Not):
        inner = _render(f.child, occurrence, counter)
        if _prec(f.child) < _PREC[Not]:
            inner = f"({inner})"
        return f"~{inner}"
    p = _PREC[type(f)]
    # implication groups to the right, the rest to the left
    lmin, rmin = (p + 1, p) if isinstance(f, Implies) else (p, p + 1)
    ls = _render(f.left, occurrence, counter)
    rs = _render(f.right, occurrence, counter)
    if _prec(f.left) < lmin:
        ls = f"({ls})"
    if _prec(f.right) < rmin:
        rs = f"({rs})"
    return f"{ls} {_OPS[type(f)]} {rs}"


# -------------------------------------------------------------- decomposition


def iter_atoms(f: Formula) -> Iterator[Atom]:
    """Atoms in concrete-syntax order (left to right)."""
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            yield node
        elif isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, Quantifier):
            stack.append(node.body)
        else:
            stack.append(node.right)
            stack.append(node.left)


def atomic_sequence(f: Formula) -> list[AtomOccurrence]:
    out = []
    for pos, a in enumerate(iter_atoms(f)):
        out.append(
            AtomOccurrence(
                pos,
                a.kind,
                OccRef(pos, Side.LEFT, a.left),
                OccRef(pos, Side.RIGHT, a.right),
            )
        )
    return out


def occurrence_count(f: Formula) -> int:
    return 2 * sum(1 for _ in iter_atoms(f))


def variables(f: Formula) -> list[str]:
    """Variables occurring in atoms, in order of first occurrence."""
    seen: dict[str, None] = {}
    for a in iter_atoms(f):
        seen.setdefault(a.left)
        seen.setdefault(a.right)
    return list(seen)


def free_variables(f: Formula, bound: frozenset = frozenset()) -> set[str]:
    if isinstance(f, Atom):
        return {v for v in (f.left, f.right) if v not in bound}
    if isinstance(f, Not):
        return free_variables(f.child, bound)
    if isinstance(f, Quantifier):
        return free_variables(f.body, bound | {f.var})
    return free_variables(f.left, bound) | free_variables(f.right, bound)


def build_var_graph(f: Formula) -> VarGraph:
    edges = tuple((a.left, a.right) for a in iter_atoms(f))
    nodes = frozenset(v for e in edges for v in e)
    return VarGraph(nodes, edges)


def encode_atoms(f: Formula) -> tuple[list[int], list[int], list[int], list[str]]:
    """Flatten ``f`` to parallel int arrays (kind, left id, right id).

    Kind is 1 for membership and 0 for equality; variable ids follow
    first-occurrence order and index into the returned name list.
    """
    names = variables(f)
    ids = {v: i for i, v in enumerate(names)}
    kinds, lefts, rights = [], [], []
    for a in iter_atoms(f):
        kinds.append(1 if a.kind is AtomKind.MEMBER else 0)
        lefts.append(ids[a.left])
        rights.append(ids[a.right])
    return kinds, lefts, rights, names


def conjunction(atoms: list[Atom]) -> Formula:
    """Left-nested conjunction of ``atoms`` (the shape ``parse`` gives ``a & b & c``)."""
    node: Formula = atoms[0]
    for a in atoms[1:]:
        node = And(node, a)
    return node


# ---------------------------------------------------------------- JSON export

_BIN_TAGS = {And: "and", Or: "or", Implies: "implies", Iff: "iff"}
_TAG_BIN = {v: k for k, v in _BIN_TAGS.items()}


def to_json(f: Formula) -> dict:
    if isinstance(f, Atom):
        return {"op": "in" if f.kind is AtomKind.MEMBER else "eq", "left": f.left, "right": f.right}
    if isinstance(f, Not):
        return {"op": "not", "arg": to_json(f.child)}
    if isinstance(f, Quantifier):
        return {"op": f.kind, "var": f.var, "bounded": f.bounded_in_V, "body": to_json(f.body)}
    return {"op": _BIN_TAGS[type(f)], "left": to_json(f.left), "right": to_json(f.right)}


def from_json(obj: dict) -> Formula:
    op = obj["op"]
    if op in ("in", "eq"):
        return Atom(AtomKind.MEMBER if op == "in" else AtomKind.EQUAL, obj["left"], obj["right"])
    if op == "not":
        return Not(from_json(obj["arg"]))
    if op in ("all", "ex"):
        return Quantifier(op, obj["var"], bool(obj.get("bounded", False)), from_json(obj["body"]))
    if op in _TAG_BIN:
        return _TAG_BIN[op](from_json(obj["left"]), from_json(obj["right"]))
    raise ValueError(f"unknown op {op!r}")
