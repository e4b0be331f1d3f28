"""Exhaustive corpora of atom conjunctions and the cross-validation sweeps.

Variables are canonicalised to ``v0, v1, ...`` in order of first
occurrence, so each corpus entry is a distinct formula up to renaming.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .acyclic import acyclic_verdict, graph_acyclic
from .canonical import canonical_index, canonical_verdict, minimal_rng_bruteforce, rng_summary
from .errors import SizeLimit
from .formula import Atom, AtomKind, Formula, build_var_graph, conjunction, render
from .stratify import is_stratified

DEFAULT_MAX_ATOMS = 4
DEFAULT_MAX_VARS = 4
HARD_LIMIT = (6, 6)


def _growth_strings(length: int, max_blocks: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings: each entry at most one above the running max."""

    def rec(prefix: list[int], top: int):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for v in range(min(top + 2, max_blocks)):
            prefix.append(v)
            yield from rec(prefix, max(top, v))
            prefix.pop()

    yield from rec([], -1)


def enumerate_conjunctions(max_atoms: int, max_vars: int, min_atoms: int = 1) -> Iterator[Formula]:
    """All conjunctions of ``min_atoms..max_atoms`` atoms over at most ``max_vars`` variables.

    Repeated atoms are included; variables are named by first occurrence.
    """
    if max_atoms < 1 or max_vars < 1:
        raise ValueError("corpus bounds must be positive")
    if max_atoms > HARD_LIMIT[0] or max_vars > HARD_LIMIT[1]:
        raise SizeLimit(f"corpus bounds above {HARD_LIMIT} are not supported")
    for k in range(min_atoms, max_atoms + 1):
        slots = list(_growth_strings(2 * k, max_vars))
        for kinds in product((AtomKind.MEMBER, AtomKind.EQUAL), repeat=k):
            for rgs in slots:
                atoms = [Atom(kinds[i], f"v{rgs[2 * i]}", f"v{rgs[2 * i + 1]}") for i in range(k)]
                yield conjunction(atoms)


@dataclass
class CompareReport:
    max_atoms: int
    max_vars: int
    formulas: int = 0
    stratified: int = 0
    acyclic: int = 0
    canonical_disagreements: list[str] = field(default_factory=list)
    acyclic_disagreements: list[str] = field(default_factory=list)
    acyclic_not_stratified: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.canonical_disagreements or self.acyclic_disagreements or self.acyclic_not_stratified)

    def to_json(self) -> dict:
        return {
            "max_atoms": self.max_atoms,
            "max_vars": self.max_vars,
            "formulas": self.formulas,
            "stratified": self.stratified,
            "acyclic": self.acyclic,
            "canonical_vs_oracle_disagreements": self.canonical_disagreements,
            "acyclic_vs_graph_disagreements": self.acyclic_disagreements,
            "acyclic_but_unstratified": self.acyclic_not_stratified,
            "ok": self.ok,
        }


def compare(max_atoms: int = DEFAULT_MAX_ATOMS, max_vars: int = DEFAULT_MAX_VARS) -> CompareReport:
    """Run both indexing criteria against their direct oracles over the corpus."""
    report = CompareReport(max_atoms, max_vars)
    for f in enumerate_conjunctions(max_atoms, max_vars):
        report.formulas += 1
        strat = is_stratified(f)
        canon = canonical_verdict(f).stratified
        acyc = acyclic_verdict(f).acyclic
        graph = graph_acyclic(build_var_graph(f))
        report.stratified += strat
        report.acyclic += graph
        if canon != strat:
            report.canonical_disagreements.append(render(f))
        if acyc != graph:
            report.acyclic_disagreements.append(render(f))
        if acyc and not strat:
            report.acyclic_not_stratified.append(render(f))
    return report


@dataclass
class MinimalityReport:
    formulas: int = 0
    mismatches: list[tuple[str, int, int]] = field(default_factory=list)  # (formula, canonical, brute)


def minimality_sweep(max_atoms: int = 3, max_vars: int = DEFAULT_MAX_VARS) -> MinimalityReport:
    report = MinimalityReport()
    for f in enumerate_conjunctions(max_atoms, max_vars):
        report.formulas += 1
        canon = rng_summary(canonical_index(f)).total
        brute = minimal_rng_bruteforce(f)
        if canon != brute:
            report.mismatches.append((render(f), canon, brute))
    return report


def index_bound_violations(max_atoms: int = DEFAULT_MAX_ATOMS, max_vars: int = DEFAULT_MAX_VARS) -> list[str]:
    """Formulas whose canonical indices leave ``[1, 2|phi| - 1]``."""
    bad = []
    for f in enumerate_conjunctions(max_atoms, max_vars):
        pi = canonical_index(f)
        hi = 2 * len(pi) - 1
        if not all(1 <= n <= hi for n in pi.indices):
            bad.append(render(f))
    return bad
