"""Comprehension instances and their invariance under constrained permutations.

A comprehension instance is a formula ``phi`` with one class variable and
named parameters bound to elements.  Its defined class ``C`` collects the
``y`` satisfying ``phi``.  Under a permutation ``f`` the instance is
invariant when, for every ``y``, ``f(y) in C`` agrees with ``phi`` evaluated
with every membership read through ``f``.

Constraint levels per name (a parameter, or ``"_class"`` for ``C``):

* 0 -- ``f`` is any bijection of the universe;
* 1 -- ``f`` also fixes the set setwise (the parameter's extension, or ``C``);
* 2 -- additionally the j-lift of ``f`` exists and fixes it setwise.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import permutations as _orders
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from ..errors import PreconditionError, SizeLimit
from ..formula import Formula
from .evaluate import check_assignment, compile_formula
from .structures import DEFAULT_LIMIT, ClassSubset, Digraph, Permutation, permute_level

CLASS_KEY = "_class"

INVARIANT = "invariant"
VIOLATED = "violated"
VACUOUS = "vacuous"

EXIT_CODES = {INVARIANT: 0, VIOLATED: 1, VACUOUS: 2}

Constraint = tuple[ClassSubset, int]


@dataclass(frozen=True)
class Violation:
    permutation: Permutation
    witness: int
    expected: bool  # f(y) in C
    got: bool  # phi^f at y


@dataclass
class InvarianceReport:
    levels: dict[str, int]
    permutations_tested: int
    violations: list[Violation]
    verdict: str
    defined_class: ClassSubset = frozenset()
    permutations_rejected: int | None = None
    sampled: bool = False

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def violating_permutations(self) -> list[Permutation]:
        out: list[Permutation] = []
        for v in self.violations:
            if not out or out[-1] != v.permutation:
                out.append(v.permutation)
        return out

    def to_json(self) -> dict:
        return {
            "levels": dict(self.levels),
            "permutations_tested": self.permutations_tested,
            "permutations_rejected": self.permutations_rejected,
            "sampled": self.sampled,
            "defined_class": sorted(self.defined_class),
            "violations": [
                {
                    "permutation": list(v.permutation.image),
                    "witness": v.witness,
                    "expected": v.expected,
                    "got": v.got,
                }
                for v in self.violations
            ],
            "verdict": self.verdict,
        }


def _env(class_var: str, params: Mapping[str, int]) -> dict:
    env = dict(params)
    env[class_var] = 0
    return env


def defined_class(d: Digraph, phi: Formula, class_var: str, params: Mapping[str, int]) -> ClassSubset:
    env = _env(class_var, params)
    check_assignment(d, phi, env)
    run = compile_formula(d, phi)
    ident = tuple(range(d.n))
    members = []
    for y in range(d.n):
        env[class_var] = y
        if run(env, ident):
            members.append(y)
    return frozenset(members)


def _witnesses(d: Digraph, phi: Formula, class_var: str, params, C: ClassSubset, f: Permutation):
    env = _env(class_var, params)
    run = compile_formula(d, phi)
    for y in range(d.n):
        env[class_var] = y
        expected = f(y) in C
        got = run(env, f.image)
        if expected != got:
            yield y, expected, got


def comprehension_invariant(
    d: Digraph,
    phi: Formula,
    class_var: str,
    params: Mapping[str, int],
    C: Iterable[int],
    f: Permutation,
) -> bool | int:
    """``True`` if invariant under ``f``, else the least violating element."""
    C = frozenset(C)
    if C != defined_class(d, phi, class_var, params):
        raise PreconditionError("C is not the class defined by phi")
    for y, _, _ in _witnesses(d, phi, class_var, params, C, f):
        return y
    return True


def _cells(n: int, constraints: Sequence[Constraint]) -> list[list[int]]:
    """Blocks of elements that agree on membership in every level>=1 subset."""
    fixed = [X for X, level in constraints if level >= 1]
    groups: dict[tuple, list[int]] = {}
    for x in range(n):
        groups.setdefault(tuple(x in X for X in fixed), []).append(x)
    return list(groups.values())


def _satisfies(d: Digraph, f: Permutation, constraints: Sequence[Constraint]) -> bool:
    return all(permute_level(d, f, X, level) for X, level in constraints)


def enumerate_permutations(
    d: Digraph, constraints: Sequence[Constraint], limit: int = DEFAULT_LIMIT
) -> Iterator[Permutation]:
    """Permutations of the universe meeting every ``(subset, level)``, lexicographically.

    Only bijections that preserve each setwise-fixed subset are generated;
    the level-2 condition is then filtered.
    """
    if d.n > limit:
        raise SizeLimit(f"universe of size {d.n} exceeds the permutation limit {limit}")
    cells = _cells(d.n, constraints)
    found = []
    for arrangement in product(*(_orders(c) for c in cells)):
        image = [0] * d.n
        for cell, moved in zip(cells, arrangement):
            for x, fx in zip(cell, moved):
                image[x] = fx
        f = Permutation(tuple(image))
        if _satisfies(d, f, constraints):
            found.append(f)
    found.sort()
    return iter(found)


def sample_permutations(
    d: Digraph, constraints: Sequence[Constraint], count: int, seed: int
) -> Iterator[Permutation]:
    """Up to ``count`` distinct random constraint-satisfying permutations, sorted."""
    rng = random.Random(seed)
    cells = _cells(d.n, constraints)
    found = set()
    for _ in range(count):
        image = [0] * d.n
        for cell in cells:
            moved = list(cell)
            rng.shuffle(moved)
            for x, fx in zip(cell, moved):
                image[x] = fx
        f = Permutation(tuple(image))
        if f not in found and _satisfies(d, f, constraints):
            found.add(f)
    return iter(sorted(found))


def resolve_constraints(
    d: Digraph, params: Mapping[str, int], C: ClassSubset, levels: Mapping[str, int]
) -> list[Constraint]:
    out = []
    for name, level in sorted(levels.items()):
        if level not in (0, 1, 2):
            raise ValueError(f"level for {name!r} must be 0, 1 or 2")
        if name == CLASS_KEY:
            out.append((C, level))
        elif name in params:
            out.append((d.extension(params[name]), level))
        else:
            raise PreconditionError(f"constraint names unknown parameter {name!r}")
    return out


def invariance_survey(
    d: Digraph,
    phi: Formula,
    class_var: str,
    params: Mapping[str, int],
    levels: Mapping[str, int],
    limit: int = DEFAULT_LIMIT,
    samples: int | None = None,
    seed: int | None = None,
) -> InvarianceReport:
    """Check the instance against every permutation allowed by ``levels``.

    Above ``limit`` the survey needs both ``samples`` and ``seed`` and then
    checks a reproducible random subset instead.
    """
    C = defined_class(d, phi, class_var, params)
    constraints = resolve_constraints(d, params, C, levels)
    if d.n > limit:
        if samples is None or seed is None:
            raise SizeLimit(
                f"universe of size {d.n} exceeds the permutation limit {limit}; pass samples and a seed to sample"
            )
        perms = list(sample_permutations(d, constraints, samples, seed))
        rejected = None
        sampled = True
    else:
        perms = list(enumerate_permutations(d, constraints, limit))
        rejected = math.factorial(d.n) - len(perms)
        sampled = False
    violations = []
    for f in perms:
        for y, expected, got in _witnesses(d, phi, class_var, params, C, f):
            violations.append(Violation(f, y, expected, got))
    violations.sort(key=lambda v: (v.permutation.image, v.witness))
    if not perms:
        verdict = VACUOUS
    elif violations:
        verdict = VIOLATED
    else:
        verdict = INVARIANT
    return InvarianceReport(
        levels=dict(levels),
        permutations_tested=len(perms),
        violations=violations,
        verdict=verdict,
        defined_class=C,
        permutations_rejected=rejected,
        sampled=sampled,
    )
