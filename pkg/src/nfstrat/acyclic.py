"""Acyclic indexing and the direct acyclicity check on the variable multigraph.

The indexing uses a single rule for both relations: whichever side of an
atom is indexed first with ``n``, the other side gets ``n + 1``.  The first
occurrence gets 1.  Atoms are visited in the same order as in canonical
indexing; each is seeded on the variable with the higher highest-so-far
index (an unindexed variable counts as 0, ties go to the left variable),
and an atom with no indexed variable starts again at 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .canonical import OccurrenceIndexing, Origin, RngSummary, _run, indexing_json, rng_summary
from .formula import Formula, VarGraph


@dataclass(frozen=True)
class AcyclicVerdict:
    acyclic: bool
    summary: RngSummary
    indexing: OccurrenceIndexing


def acyclic_index(f: Formula) -> OccurrenceIndexing:
    return _run(f, kernels.acyclic_indices, Origin.ACYCLIC)


def acyclic_verdict(f: Formula) -> AcyclicVerdict:
    pi = acyclic_index(f)
    summary = rng_summary(pi)
    return AcyclicVerdict(summary.total == summary.var_count, summary, pi)


def graph_acyclic(g: VarGraph) -> bool:
    """True iff the multigraph is a forest; self-loops and parallel edges are cycles."""
    incident: dict[str, list[tuple[int, str]]] = {v: [] for v in g.nodes}
    for eid, (u, v) in enumerate(g.edges):
        if u == v:
            return False
        incident[u].append((eid, v))
        incident[v].append((eid, u))
    seen: set[str] = set()
    for root in sorted(g.nodes):
        if root in seen:
            continue
        seen.add(root)
        stack = [(root, -1)]
        while stack:
            node, via = stack.pop()
            for eid, other in incident[node]:
                if eid == via:
                    continue
                if other in seen:
                    return False
                seen.add(other)
                stack.append((other, eid))
    return True


def to_dot(g: VarGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in sorted(g.nodes):
        lines.append(f'  "{v}";')
    for eid, (u, v) in enumerate(g.edges):
        lines.append(f'  "{u}" -- "{v}" [label="{eid}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(verdict: AcyclicVerdict) -> dict:
    out = indexing_json(verdict.indexing, verdict.summary)
    out["acyclic"] = verdict.acyclic
    return out
