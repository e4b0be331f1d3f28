"""First-order evaluation over a finite digraph under ``f``-membership.

An atom ``u in w`` holds under ``f`` when ``(f(u), w)`` is a membership
edge; ``u = w`` is element identity.  Quantifiers range over the whole
universe (a ``:V`` bound changes nothing here).  Formulas are compiled once
into closures, and the permutation is passed at call time so one compiled
formula serves a whole permutation survey.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Mapping

from ..errors import UnboundVariable
from ..formula import And, Atom, AtomKind, Formula, Iff, Implies, Not, Or, Quantifier, free_variables
from .structures import Digraph, Permutation

Env = dict
Compiled = Callable[[Env, tuple], bool]

_MISSING = object()


def _compile(node: Formula, mem: frozenset, universe: range) -> Compiled:
    if isinstance(node, Atom):
        u, w = node.left, node.right
        if node.kind is AtomKind.MEMBER:
            return lambda env, f: (f[env[u]], env[w]) in mem
        return lambda env, f: env[u] == env[w]
    if isinstance(node, Not):
        c = _compile(node.child, mem, universe)
        return lambda env, f: not c(env, f)
    if isinstance(node, Quantifier):
        body = _compile(node.body, mem, universe)
        var = node.var
        want = node.kind == "all"

        def quant(env, f):
            saved = env.get(var, _MISSING)
            try:
                for e in universe:
                    env[var] = e
                    if body(env, f) != want:
                        return not want
                return want
            finally:
                if saved is _MISSING:
                    del env[var]
                else:
                    env[var] = saved

        return quant
    left = _compile(node.left, mem, universe)
    right = _compile(node.right, mem, universe)
    if isinstance(node, And):
        return lambda env, f: left(env, f) and right(env, f)
    if isinstance(node, Or):
        return lambda env, f: left(env, f) or right(env, f)
    if isinstance(node, Implies):
        return lambda env, f: (not left(env, f)) or right(env, f)
    if isinstance(node, Iff):
        return lambda env, f: left(env, f) == right(env, f)
    raise TypeError(f"not a formula node: {node!r}")


@lru_cache(maxsize=256)
def compile_formula(d: Digraph, phi: Formula) -> Compiled:
    return _compile(phi, d.membership, range(d.n))


def check_assignment(d: Digraph, phi: Formula, asg: Mapping[str, int]) -> None:
    for v in sorted(free_variables(phi)):
        if v not in asg:
            raise UnboundVariable(v)
    for v, e in asg.items():
        if not 0 <= e < d.n:
            raise ValueError(f"{v} -> {e} is outside the universe")


def evaluate(d: Digraph, phi: Formula, asg: Mapping[str, int], f: Permutation | None = None) -> bool:
    """Truth of ``phi`` in ``d`` under ``asg`` with every ``in`` read as ``in^f``."""
    check_assignment(d, phi, asg)
    image = tuple(range(d.n)) if f is None else f.image
    return compile_formula(d, phi)(dict(asg), image)
