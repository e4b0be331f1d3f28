"""Finite membership digraphs, permutations of their universe, and the j-lift."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations as _all_orders
from typing import Iterable, Mapping, Union

from ..errors import RangeError, SizeLimit

ClassSubset = frozenset  # subset of range(n)

DEFAULT_LIMIT = 8


@dataclass(frozen=True)
class Digraph:
    """Universe ``range(n)``; ``(y, x)`` in ``membership`` means ``y in x``."""

    n: int
    membership: frozenset
    names: Mapping[int, str] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "membership", frozenset((int(y), int(x)) for y, x in self.membership))
        for y, x in self.membership:
            if not (0 <= y < self.n and 0 <= x < self.n):
                raise RangeError(f"edge ({y}, {x}) outside universe of size {self.n}")

    @cached_property
    def extensions(self) -> tuple[frozenset, ...]:
        ext: list[set] = [set() for _ in range(self.n)]
        for y, x in self.membership:
            ext[x].add(y)
        return tuple(frozenset(s) for s in ext)

    @cached_property
    def by_extension(self) -> dict[frozenset, int]:
        """Extension -> lowest element having it."""
        out: dict[frozenset, int] = {}
        for x, ext in enumerate(self.extensions):
            out.setdefault(ext, x)
        return out

    def extension(self, x: int) -> frozenset:
        if not 0 <= x < self.n:
            raise RangeError(f"element {x} outside universe of size {self.n}")
        return self.extensions[x]

    def is_extensional(self) -> bool:
        return len(self.by_extension) == self.n

    def name(self, x: int) -> str:
        return self.names.get(x, str(x))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": sorted([y, x] for y, x in self.membership),
            "names": {str(k): v for k, v in sorted(self.names.items())},
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "Digraph":
        n = obj["n"]
        if not isinstance(n, int) or n < 0:
            raise ValueError("model 'n' must be a non-negative integer")
        edges = obj.get("edges", [])
        if any(len(e) != 2 for e in edges):
            raise ValueError("each model edge must be a pair [y, x]")
        names = {int(k): str(v) for k, v in obj.get("names", {}).items()}
        return cls(n, frozenset(tuple(e) for e in edges), names)

    @classmethod
    def load(cls, path) -> "Digraph":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


@dataclass(frozen=True, order=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"{self.image} is not a permutation")

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __len__(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def swap(cls, n: int, a: int, b: int) -> "Permutation":
        img = list(range(n))
        img[a], img[b] = b, a
        return cls(tuple(img))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for x, fx in enumerate(self.image):
            inv[fx] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == fx for x, fx in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least element."""
        seen = set()
        out = []
        for start in range(len(self.image)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.image[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.image[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class UndefinedWitness:
    """``f``\\`\\`ext(element) is the extension of no element."""

    element: int


@dataclass(frozen=True)
class NonExtensional:
    """Two elements share an extension, so the lift is not well defined."""

    first: int
    second: int


JLift = Union[Permutation, UndefinedWitness, NonExtensional]


def extension(d: Digraph, x: int) -> frozenset:
    return d.extension(x)


def image_class(f: Permutation, X: Iterable[int]) -> ClassSubset:
    return frozenset(f(y) for y in X)


def permutes(f: Permutation, X: Iterable[int]) -> bool:
    X = frozenset(X)
    return image_class(f, X) == X


def j_lift(d: Digraph, f: Permutation) -> JLift:
    """The map sending each ``x`` to the element whose extension is ``f``\\`\\`ext(x)."""
    if not d.is_extensional():
        owner: dict[frozenset, int] = {}
        for x, ext in enumerate(d.extensions):
            if ext in owner:
                return NonExtensional(owner[ext], x)
            owner[ext] = x
    table = d.by_extension
    image = []
    for x, ext in enumerate(d.extensions):
        target = table.get(frozenset(f(y) for y in ext))
        if target is None:
            return UndefinedWitness(x)
        image.append(target)
    # injective because d is extensional and f is a bijection
    return Permutation(tuple(image))


def permute_level(d: Digraph, f: Permutation, X: Iterable[int], level: int) -> bool:
    if level not in (0, 1, 2):
        raise ValueError(f"permute level must be 0, 1 or 2, got {level}")
    if level == 0:
        return True
    X = frozenset(X)
    if not permutes(f, X):
        return False
    if level == 1:
        return True
    g = j_lift(d, f)
    return isinstance(g, Permutation) and permutes(g, X)


def _check_limit(n: int, limit: int) -> None:
    if n > limit:
        raise SizeLimit(f"universe of size {n} exceeds the permutation limit {limit}")


def automorphisms(d: Digraph, limit: int = DEFAULT_LIMIT) -> list[Permutation]:
    """Every ``f`` with ``y in x  <=>  f(y) in f(x)``, in lexicographic order."""
    _check_limit(d.n, limit)
    n = d.n
    mem = d.membership
    loops = [(x, x) in mem for x in range(n)]
    indeg = [len(e) for e in d.extensions]
    outdeg = [0] * n
    for y, _ in mem:
        outdeg[y] += 1
    image = [-1] * n
    used = [False] * n
    found: list[Permutation] = []

    def extend(x: int) -> None:
        if x == n:
            found.append(Permutation(tuple(image)))
            return
        for fx in range(n):
            if used[fx] or loops[fx] != loops[x] or indeg[fx] != indeg[x] or outdeg[fx] != outdeg[x]:
                continue
            ok = True
            for z in range(x):
                fz = image[z]
                if ((z, x) in mem) != ((fz, fx) in mem) or ((x, z) in mem) != ((fx, fz) in mem):
                    ok = False
                    break
            if ok:
                image[x] = fx
                used[fx] = True
                extend(x + 1)
                used[fx] = False
        image[x] = -1

    extend(0)
    return found


def is_automorphism(d: Digraph, f: Permutation) -> bool:
    return {(f(y), f(x)) for y, x in d.membership} == d.membership


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in _all_orders(range(n))]
