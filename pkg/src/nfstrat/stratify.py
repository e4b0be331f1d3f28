"""Quine stratifiability decided directly on variables.

Each atom is a difference constraint between two variable types: ``x in y``
forces ``t(y) = t(x) + 1`` and ``x = y`` forces ``t(x) = t(y)``.  Components
of the constraint graph are labelled breadth-first; the first edge whose
constraint disagrees with the labels closes a walk of nonzero weight, which
is returned as the certificate of unstratifiability.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Union

from .formula import AtomKind, Formula, iter_atoms, variables


@dataclass(frozen=True)
class TypeAssignment:
    types: Mapping[str, int]

    def __getitem__(self, var: str) -> int:
        return self.types[var]

    def satisfies(self, f: Formula) -> bool:
        for a in iter_atoms(f):
            step = 1 if a.kind is AtomKind.MEMBER else 0
            if self.types[a.right] != self.types[a.left] + step:
                return False
        return True


@dataclass(frozen=True)
class WalkStep:
    """One traversal of an atom: ``source -> target`` changes the type by ``weight``."""

    atom: int
    kind: AtomKind
    source: str
    target: str
    weight: int

    def reversed(self) -> "WalkStep":
        return WalkStep(self.atom, self.kind, self.target, self.source, -self.weight)


@dataclass(frozen=True)
class CycleWitness:
    steps: tuple[WalkStep, ...]
    net_weight: int

    def is_valid(self) -> bool:
        if not self.steps or self.net_weight == 0:
            return False
        for prev, nxt in zip(self.steps, self.steps[1:] + self.steps[:1]):
            if prev.target != nxt.source:
                return False
        return sum(s.weight for s in self.steps) == self.net_weight


StratifyResult = Union[TypeAssignment, CycleWitness]


def _adjacency(f: Formula) -> dict[str, list[WalkStep]]:
    adj: dict[str, list[WalkStep]] = {v: [] for v in variables(f)}
    for pos, a in enumerate(iter_atoms(f)):
        w = 1 if a.kind is AtomKind.MEMBER else 0
        forward = WalkStep(pos, a.kind, a.left, a.right, w)
        adj[a.left].append(forward)
        adj[a.right].append(forward.reversed())
    return adj


def _tree_path(var: str, parent: dict[str, WalkStep | None]) -> list[WalkStep]:
    path = []
    while parent[var] is not None:
        step = parent[var]
        path.append(step)
        var = step.source
    path.reverse()
    return path


def _close_walk(step: WalkStep, parent) -> CycleWitness:
    to_u = _tree_path(step.source, parent)
    to_v = _tree_path(step.target, parent)
    common = 0
    while common < min(len(to_u), len(to_v)) and to_u[common] == to_v[common]:
        common += 1
    walk = to_u[common:] + [step] + [s.reversed() for s in reversed(to_v[common:])]
    net = sum(s.weight for s in walk)
    if net < 0:
        walk = [s.reversed() for s in reversed(walk)]
        net = -net
    return CycleWitness(tuple(walk), net)


def stratify(f: Formula) -> StratifyResult:
    adj = _adjacency(f)
    types: dict[str, int] = {}
    parent: dict[str, WalkStep | None] = {}
    for root in adj:
        if root in types:
            continue
        types[root] = 0
        parent[root] = None
        component = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for step in adj[u]:
                v = step.target
                if v not in types:
                    types[v] = types[u] + step.weight
                    parent[v] = step
                    component.append(v)
                    queue.append(v)
                elif types[v] != types[u] + step.weight:
                    return _close_walk(step, parent)
        low = min(types[v] for v in component)
        for v in component:
            types[v] -= low
    return TypeAssignment(types)


def is_stratified(f: Formula) -> bool:
    return isinstance(stratify(f), TypeAssignment)


def to_json(result: StratifyResult) -> dict:
    if isinstance(result, TypeAssignment):
        return {"stratified": True, "types": dict(result.types)}
    return {
        "stratified": False,
        "net_weight": result.net_weight,
        "cycle": [
            {"atom": s.atom, "kind": s.kind.value, "from": s.source, "to": s.target, "weight": s.weight}
            for s in result.steps
        ],
    }
