"""Canonical indexing of variable occurrences and the rng-sum criterion.

The procedure walks the atoms of a formula greedily.  The leftmost
occurrence is indexed with the occurrence count ``|phi|``; inside an atom
``x in y`` the container gets one more than the element and ``x = y`` copies
the index.  The next atom to index is the first unindexed one that shares a
variable with the indexed prefix (otherwise simply the first unindexed
one); it is seeded from the highest index its first variable has received,
else from its second variable's highest index, else with ``|phi|`` again.

A formula is stratified exactly when every variable ends up with a single
index, i.e. when the sum of per-variable index counts equals the number of
variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from . import kernels
from .errors import EmptyFormula, SizeLimit
from .formula import Formula, OccRef, Side, atomic_sequence, encode_atoms, render


class Origin(str, Enum):
    CANONICAL = "canonical"
    ACYCLIC = "acyclic"
    ARBITRARY = "arbitrary"


@dataclass(frozen=True)
class OccurrenceIndexing:
    occurrences: tuple[OccRef, ...]  # atom order, left before right
    indices: tuple[int, ...]
    origin: Origin = Origin.ARBITRARY

    def __getitem__(self, occ: OccRef) -> int:
        return self.as_dict()[occ]

    def as_dict(self) -> dict[OccRef, int]:
        return dict(zip(self.occurrences, self.indices))

    def __len__(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class RngSummary:
    rng: Mapping[str, int]
    total: int
    var_count: int


@dataclass(frozen=True)
class CanonicalVerdict:
    stratified: bool
    summary: RngSummary
    indexing: OccurrenceIndexing


def _occurrences(f: Formula) -> tuple[OccRef, ...]:
    out = []
    for occ in atomic_sequence(f):
        out.append(occ.left_occ)
        out.append(occ.right_occ)
    return tuple(out)


def _run(f: Formula, kernel, origin: Origin) -> OccurrenceIndexing:
    kinds, lefts, rights, names = encode_atoms(f)
    if not kinds:
        raise EmptyFormula("formula has no atomic subformulas")
    indices = kernel(kinds, lefts, rights, len(names))
    return OccurrenceIndexing(_occurrences(f), tuple(indices), origin)


def canonical_index(f: Formula) -> OccurrenceIndexing:
    return _run(f, kernels.canonical_indices, Origin.CANONICAL)


def rng_summary(pi: OccurrenceIndexing) -> RngSummary:
    seen: dict[str, set[int]] = {}
    for occ, n in zip(pi.occurrences, pi.indices):
        seen.setdefault(occ.var, set()).add(n)
    rng = {v: len(s) for v, s in seen.items()}
    return RngSummary(rng, sum(rng.values()), len(rng))


def canonical_verdict(f: Formula) -> CanonicalVerdict:
    pi = canonical_index(f)
    summary = rng_summary(pi)
    return CanonicalVerdict(summary.total == summary.var_count, summary, pi)


def setlike_bound(f: Formula) -> int:
    return 2 * len(_occurrences(f))


def phf_body(f: Formula, pi: OccurrenceIndexing) -> str:
    """``f`` with each occurrence ``x`` of index ``n`` written ``j^n'f(x)``."""
    table = {(o.atom_position, o.side): n for o, n in zip(pi.occurrences, pi.indices)}

    def prefix(pos: int, side: Side, var: str) -> str:
        return f"j^{table[pos, side]}'f({var})"

    return render(f, prefix)


def phf_transform(f: Formula, pi: OccurrenceIndexing) -> str:
    """Header line with the setlike bound ``2|phi|``, then the prefixed formula."""
    return f"setlike-bound: {setlike_bound(f)}\n{phf_body(f, pi)}"


def minimal_rng_bruteforce(f: Formula, index_bound: int | None = None, max_atoms: int = 3) -> int:
    kinds, lefts, rights, names = encode_atoms(f)
    if not kinds:
        raise EmptyFormula("formula has no atomic subformulas")
    if len(kinds) > max_atoms:
        raise SizeLimit(f"brute force limited to {max_atoms} atoms, got {len(kinds)}")
    bound = 2 * 2 * len(kinds) if index_bound is None else index_bound
    if bound < 1:
        raise ValueError("index_bound must be positive")
    kernel = kernels.min_rng_bruteforce
    if bound >= 62:
        kernel = kernels.pure.min_rng_bruteforce
    return kernel(kinds, lefts, rights, len(names), bound)


def to_json(f: Formula, verdict: CanonicalVerdict, phf: bool = False) -> dict:
    out = indexing_json(verdict.indexing, verdict.summary)
    out["stratified"] = verdict.stratified
    if phf:
        out["phf"] = phf_body(f, verdict.indexing)
        out["setlike_bound"] = setlike_bound(f)
    return out


def indexing_json(pi: OccurrenceIndexing, summary: RngSummary) -> dict:
    return {
        "indices": [
            {"atom": o.atom_position, "side": o.side.value, "var": o.var, "index": n}
            for o, n in zip(pi.occurrences, pi.indices)
        ],
        "rng": dict(summary.rng),
        "sum": summary.total,
        "vars": summary.var_count,
    }
