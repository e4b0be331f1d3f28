"""Curated fixtures: comprehension instances that should be invariant, and paradoxes that should not.

Element 0 is always the empty set.  Brace terms such as ``{a, b}`` are not
in the formula language, so pairs are spelled out as
``all t. (t in p <-> t = a | t = b)`` and each fixture contains the pair
elements it needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..errors import UnknownDemo
from ..formula import Formula, parse
from .invariance import CLASS_KEY, INVARIANT, VIOLATED, InvarianceReport, invariance_survey
from .structures import Digraph, Permutation


def _pair(p: str, a: str, b: str) -> str:
    return f"(all t. (t in {p} <-> t = {a} | t = {b}))"


def digraph_from_extensions(exts: Mapping[int, tuple[int, ...]], names: Mapping[int, str] | None = None) -> Digraph:
    n = len(exts)
    return Digraph(n, frozenset((y, x) for x, ys in exts.items() for y in ys), dict(names or {}))


@dataclass(frozen=True)
class DemoSpec:
    name: str
    summary: str
    digraph: Digraph
    formula: Formula
    class_var: str
    params: Mapping[str, int]
    levels: Mapping[str, int]
    expected: str
    key_permutation: Permutation | None = None
    key_witness: int | None = None


@dataclass(frozen=True)
class Demo:
    spec: DemoSpec
    report: InvarianceReport = field(compare=False)

    @property
    def digraph(self) -> Digraph:
        return self.spec.digraph

    @property
    def formula(self) -> Formula:
        return self.spec.formula

    @property
    def constraints(self) -> Mapping[str, int]:
        return self.spec.levels

    def __iter__(self):
        return iter((self.digraph, self.formula, self.constraints, self.report))

    def matches_expectation(self) -> bool:
        if self.report.verdict != self.spec.expected:
            return False
        if self.spec.key_permutation is None:
            return True
        return any(
            v.permutation == self.spec.key_permutation and v.witness == self.spec.key_witness
            for v in self.report.violations
        )


def _russell() -> DemoSpec:
    # 0 = {}, 1 = {{}}; swapping them keeps R = {0, 1} but 1 becomes an f-member of itself
    d = digraph_from_extensions({0: (), 1: (0,)}, {0: "{}", 1: "{{}}"})
    return DemoSpec(
        "russell",
        "Russell class {y : y not in y} under the swap of {} and {{}}",
        d,
        parse("~(y in y)"),
        "y",
        {},
        {CLASS_KEY: 1},
        VIOLATED,
        Permutation.swap(2, 0, 1),
        1,
    )


def _lesniewski() -> DemoSpec:
    # chain 0 = {}, 1 = {0}, 2 = {1}, 3 = {2}, 4 = {3}; element 4 makes the 1<->3 swap's lift exist
    d = digraph_from_extensions(
        {0: (), 1: (0,), 2: (1,), 3: (2,), 4: (3,)},
        {0: "{}", 1: "{{}}", 2: "{{{}}}", 3: "{{{{}}}}", 4: "{{{{{}}}}}"},
    )
    singleton = "(all t. (t in y <-> t = x))"
    return DemoSpec(
        "lesniewski",
        "singletons that are not members of their sole member, under the swap of {{}} and {{{{}}}}",
        d,
        parse(f"ex x. ({singleton} & ~(y in x))"),
        "y",
        {},
        {CLASS_KEY: 2},
        VIOLATED,
        Permutation.swap(5, 1, 3),
        3,
    )


def _burali_forti() -> DemoSpec:
    # 0, 1 = {0}, 2 = {0, 1}: the finite von Neumann ordinals, read as transitive,
    # irreflexive sets of transitive sets
    d = digraph_from_extensions({0: (), 1: (0,), 2: (0, 1)}, {0: "0", 1: "1", 2: "2"})
    trans = "(all u. (u in {s} -> (all w. (w in u -> w in {s}))))"
    ordinal = f"{trans.format(s='y')} & ~(y in y) & (all s. (s in y -> {trans.format(s='s')}))"
    return DemoSpec(
        "burali-forti",
        "von Neumann ordinals under the swap of 0 and 1 (no automorphism needed)",
        d,
        parse(ordinal),
        "y",
        {},
        {CLASS_KEY: 1},
        VIOLATED,
        Permutation.swap(3, 0, 1),
        1,
    )


_SMALL = {0: (), 1: (0,), 2: (1,), 3: (0, 1), 4: (2, 3)}


def _complement() -> DemoSpec:
    return DemoSpec(
        "complement",
        "absolute complement of a parameter, under all permutations",
        digraph_from_extensions(_SMALL),
        parse("~(y in a)"),
        "y",
        {"a": 3},
        {},
        INVARIANT,
    )


def _boolean_union() -> DemoSpec:
    return DemoSpec(
        "boolean-union",
        "union of two parameters, under all permutations",
        digraph_from_extensions(_SMALL),
        parse("y in a | y in b"),
        "y",
        {"a": 3, "b": 4},
        {},
        INVARIANT,
    )


def _sheffer() -> DemoSpec:
    return DemoSpec(
        "sheffer",
        "Sheffer stroke (complement of the intersection) of two parameters, under all permutations",
        digraph_from_extensions(_SMALL),
        parse("~(y in a & y in b)"),
        "y",
        {"a": 3, "b": 4},
        {},
        INVARIANT,
    )


def _set_union() -> DemoSpec:
    d = digraph_from_extensions({0: (), 1: (0,), 2: (1,), 3: (0, 1), 4: (1, 3)})
    return DemoSpec(
        "set-union",
        "union of the members of A, under permutations fixing A setwise",
        d,
        parse("ex z. (z in A & y in z)"),
        "y",
        {"A": 4},
        {"A": 1},
        INVARIANT,
    )


def _relative_product() -> DemoSpec:
    # atoms a=0, b=1, c=2; pairs 3={0,1}, 4={1,2}, 5={0,2}; R = S = 6 = {3, 4}
    d = digraph_from_extensions({0: (), 1: (0,), 2: (1,), 3: (0, 1), 4: (1, 2), 5: (0, 2), 6: (3, 4)})
    text = (
        f"ex p. (p in R & (ex q. (q in S & (ex a. ex b. ({_pair('p', 'a', 'b')} & "
        f"(ex c. ({_pair('q', 'b', 'c')} & {_pair('y', 'a', 'c')})))))))"
    )
    return DemoSpec(
        "relative-product",
        "unordered relative product K = R:S, under permutations fixing R, S and K setwise",
        d,
        parse(text),
        "y",
        {"R": 6, "S": 6},
        {"R": 1, "S": 1, CLASS_KEY: 1},
        INVARIANT,
    )


def _intersection_relation() -> DemoSpec:
    # 1 = {2} and 2 = {1} give a non-trivial automorphism (1 2)(4 5)
    d = digraph_from_extensions({0: (), 1: (2,), 2: (1,), 3: (1, 2), 4: (0, 1), 5: (0, 2), 6: (3,)})
    text = f"ex x. ex z. ({_pair('y', 'x', 'z')} & (ex c. (c in x & c in z)))"
    return DemoSpec(
        "intersection-relation",
        "unordered pairs of intersecting sets, under ultrapermutations of the defined class",
        d,
        parse(text),
        "y",
        {},
        {CLASS_KEY: 2},
        INVARIANT,
    )


DEMOS = {
    "russell": _russell,
    "lesniewski": _lesniewski,
    "burali-forti": _burali_forti,
    "complement": _complement,
    "boolean-union": _boolean_union,
    "sheffer": _sheffer,
    "set-union": _set_union,
    "relative-product": _relative_product,
    "intersection-relation": _intersection_relation,
}


def demo_spec(name: str) -> DemoSpec:
    try:
        return DEMOS[name]()
    except KeyError:
        raise UnknownDemo(name) from None


def demo(name: str) -> Demo:
    spec = demo_spec(name)
    report = invariance_survey(spec.digraph, spec.formula, spec.class_var, spec.params, spec.levels)
    return Demo(spec, report)
