"""Independent reference implementations the package is checked against.

Nothing here imports the code paths it checks: type maps are searched
exhaustively, graph acyclicity is decided by counting, and formulas are
evaluated by a direct recursive interpreter over extension sets.
"""

from itertools import product

from nfstrat.formula import (
    And,
    Atom,
    AtomKind,
    Iff,
    Implies,
    Not,
    Or,
    Quantifier,
    iter_atoms,
    variables,
)
from nfstrat.model_lab import Digraph


def brute_stratifiable(f):
    """Search every type map into ``[0, #vars]``."""
    vs = variables(f)
    atoms = list(iter_atoms(f))
    for types in product(range(len(vs) + 1), repeat=len(vs)):
        t = dict(zip(vs, types))
        if all(t[a.right] == t[a.left] + (a.kind is AtomKind.MEMBER) for a in atoms):
            return True
    return False


def forest_by_counting(f):
    """A multigraph is a forest iff it has no self-loop and |E| = |V| - #components."""
    edges = [(a.left, a.right) for a in iter_atoms(f)]
    if any(u == v for u, v in edges):
        return False
    nodes = {v for e in edges for v in e}
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for u, v in edges:
        parent[find(u)] = find(v)
    components = len({find(v) for v in nodes})
    return len(edges) == len(nodes) - components


def naive_eval(d, phi, env, f=None):
    """Textbook Tarskian evaluation; ``u in w`` under ``f`` is ``f(u)`` in ext(``w``)."""
    fx = (lambda e: e) if f is None else f
    if isinstance(phi, Atom):
        if phi.kind is AtomKind.MEMBER:
            return fx(env[phi.left]) in d.extension(env[phi.right])
        return env[phi.left] == env[phi.right]
    if isinstance(phi, Not):
        return not naive_eval(d, phi.child, env, f)
    if isinstance(phi, And):
        return naive_eval(d, phi.left, env, f) and naive_eval(d, phi.right, env, f)
    if isinstance(phi, Or):
        return naive_eval(d, phi.left, env, f) or naive_eval(d, phi.right, env, f)
    if isinstance(phi, Implies):
        return (not naive_eval(d, phi.left, env, f)) or naive_eval(d, phi.right, env, f)
    if isinstance(phi, Iff):
        return naive_eval(d, phi.left, env, f) == naive_eval(d, phi.right, env, f)
    if isinstance(phi, Quantifier):
        results = [naive_eval(d, phi.body, {**env, phi.var: e}, f) for e in range(d.n)]
        return all(results) if phi.kind == "all" else any(results)
    raise TypeError(phi)


def random_extensional_digraph(rng, n, density=0.35):
    while True:
        edges = frozenset((y, x) for y in range(n) for x in range(n) if rng.random() < density)
        d = Digraph(n, edges)
        if d.is_extensional():
            return d


def random_formula(rng, pool=("x", "y", "z"), depth=3):
    if depth == 0 or rng.random() < 0.25:
        kind = AtomKind.MEMBER if rng.random() < 0.7 else AtomKind.EQUAL
        return Atom(kind, rng.choice(pool), rng.choice(pool))
    r = rng.random()
    if r < 0.15:
        return Not(random_formula(rng, pool, depth - 1))
    if r < 0.4:
        return Quantifier(rng.choice(("all", "ex")), rng.choice(pool), rng.random() < 0.5, random_formula(rng, pool, depth - 1))
    cls = rng.choice((And, Or, Implies, Iff))
    return cls(random_formula(rng, pool, depth - 1), random_formula(rng, pool, depth - 1))
