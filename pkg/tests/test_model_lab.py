import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nfstrat.errors import PreconditionError, RangeError, SizeLimit, UnboundVariable
from nfstrat.formula import parse
from nfstrat.model_lab import (
    CLASS_KEY,
    Digraph,
    NonExtensional,
    Permutation,
    UndefinedWitness,
    all_permutations,
    automorphisms,
    comprehension_invariant,
    defined_class,
    digraph_from_extensions,
    enumerate_permutations,
    evaluate,
    extension,
    image_class,
    invariance_survey,
    is_automorphism,
    j_lift,
    permute_level,
    permutes,
    sample_permutations,
)
from oracles import naive_eval, random_extensional_digraph

RUSSELL = digraph_from_extensions({0: (), 1: (0,)})
SWAP = Permutation.swap(2, 0, 1)
TWO_CYCLE = digraph_from_extensions({0: (), 1: (2,), 2: (1,), 3: (1, 2), 4: (0, 1), 5: (0, 2), 6: (3,)})


def test_extension_and_range():
    assert extension(RUSSELL, 1) == {0}
    assert extension(RUSSELL, 0) == frozenset()
    with pytest.raises(RangeError):
        extension(RUSSELL, 2)
    with pytest.raises(RangeError):
        Digraph(2, {(0, 2)})


def test_image_class_and_permutes():
    f = Permutation((1, 2, 0))
    assert image_class(f, {0, 1}) == {1, 2}
    assert not permutes(f, {0, 1})
    assert permutes(f, {0, 1, 2})
    assert permutes(f, set())


def test_permutation_helpers():
    f = Permutation((1, 2, 0, 3))
    assert f.inverse().image == (2, 0, 1, 3)
    assert f.cycles() == [(0, 1, 2)]
    assert Permutation.identity(3).image == (0, 1, 2)
    with pytest.raises(ValueError):
        Permutation((0, 0))


def test_j_lift_identity():
    assert j_lift(RUSSELL, Permutation.identity(2)) == Permutation.identity(2)


def test_j_lift_undefined():
    # swap sends ext({{}}) = {0} to {1}, which no element has
    assert j_lift(RUSSELL, SWAP) == UndefinedWitness(1)


def test_j_lift_non_extensional():
    d = Digraph(3, set())
    assert j_lift(d, Permutation.identity(3)) == NonExtensional(0, 1)


def test_j_lift_of_two_cycle_swap():
    f = Permutation((0, 2, 1, 3, 5, 4, 6))
    assert j_lift(TWO_CYCLE, f) == f


def test_permute_levels():
    X = {0, 1}
    assert permute_level(RUSSELL, SWAP, X, 0)
    assert permute_level(RUSSELL, SWAP, X, 1)
    assert not permute_level(RUSSELL, SWAP, X, 2)
    assert not permute_level(RUSSELL, SWAP, {1}, 1)
    with pytest.raises(ValueError):
        permute_level(RUSSELL, SWAP, X, 3)


def test_f_membership_evaluation():
    phi = parse("y in y")
    assert not evaluate(RUSSELL, phi, {"y": 1})
    assert evaluate(RUSSELL, phi, {"y": 1}, SWAP)
    assert evaluate(RUSSELL, parse("ex z. z in y"), {"y": 1})
    assert not evaluate(RUSSELL, parse("ex z. z in y"), {"y": 0})


def test_bounded_quantifier_ranges_over_everything():
    assert evaluate(RUSSELL, parse("all z:V. z = z"), {}) == evaluate(RUSSELL, parse("all z. z = z"), {})


def test_unbound_variable():
    with pytest.raises(UnboundVariable):
        evaluate(RUSSELL, parse("x in y"), {"x": 0})


def test_defined_class_russell():
    assert defined_class(RUSSELL, parse("~(y in y)"), "y", {}) == {0, 1}


def test_comprehension_invariant_returns_witness():
    phi = parse("~(y in y)")
    assert comprehension_invariant(RUSSELL, phi, "y", {}, {0, 1}, Permutation.identity(2)) is True
    assert comprehension_invariant(RUSSELL, phi, "y", {}, {0, 1}, SWAP) == 1
    with pytest.raises(PreconditionError):
        comprehension_invariant(RUSSELL, phi, "y", {}, {0}, SWAP)


def test_enumerate_unconstrained():
    d = digraph_from_extensions({0: (), 1: (0,), 2: (1,)})
    assert len(list(enumerate_permutations(d, []))) == 6


def test_enumerate_russell_class_level_one():
    assert list(enumerate_permutations(RUSSELL, [(frozenset({0, 1}), 1)])) == [Permutation.identity(2), SWAP]


def test_enumerate_level_two_keeps_identity_only():
    assert list(enumerate_permutations(RUSSELL, [(frozenset({0, 1}), 2)])) == [Permutation.identity(2)]


def test_enumerate_is_lexicographic():
    d = digraph_from_extensions({0: (), 1: (0,), 2: (1,), 3: (0, 1)})
    perms = [p.image for p in enumerate_permutations(d, [(frozenset({1, 2}), 1)])]
    assert perms == sorted(perms)
    assert len(perms) == 4


def test_enumerate_size_limit():
    d = Digraph(9, set())
    with pytest.raises(SizeLimit):
        list(enumerate_permutations(d, [], limit=8))


def test_survey_counts_add_up():
    d = digraph_from_extensions({0: (), 1: (0,), 2: (1,), 3: (0, 1)})
    report = invariance_survey(d, parse("y in a"), "y", {"a": 3}, {"a": 1})
    assert report.permutations_tested + report.permutations_rejected == math.factorial(4)
    assert report.permutations_tested == 4


def test_survey_level_two_on_russell_keeps_identity():
    report = invariance_survey(RUSSELL, parse("~(y in y)"), "y", {}, {CLASS_KEY: 2})
    assert report.verdict == "invariant" and report.permutations_tested == 1


def test_survey_vacuous_without_lifts():
    # two empty elements: no permutation, not even the identity, has a lift
    report = invariance_survey(Digraph(2, set()), parse("y = y"), "y", {}, {CLASS_KEY: 2})
    assert report.verdict == "vacuous" and report.exit_code == 2
    assert report.permutations_rejected == 2


def test_survey_unknown_parameter():
    with pytest.raises(PreconditionError):
        invariance_survey(RUSSELL, parse("y in a"), "y", {"a": 1}, {"b": 1})


def test_sampling_is_reproducible():
    d = digraph_from_extensions({i: () if i == 0 else (i - 1,) for i in range(10)})
    a = list(sample_permutations(d, [], 50, seed=3))
    b = list(sample_permutations(d, [], 50, seed=3))
    assert a == b and 0 < len(a) <= 50
    with pytest.raises(SizeLimit):
        invariance_survey(d, parse("y in y"), "y", {}, {})
    report = invariance_survey(d, parse("y in y"), "y", {}, {}, samples=20, seed=1)
    assert report.sampled and report.permutations_rejected is None


def test_automorphisms_of_well_founded_chain():
    d = digraph_from_extensions({0: (), 1: (0,), 2: (1,), 3: (2,)})
    assert automorphisms(d) == [Permutation.identity(4)]


def test_automorphisms_of_two_cycle():
    assert automorphisms(TWO_CYCLE) == [Permutation.identity(7), Permutation((0, 2, 1, 3, 5, 4, 6))]


def test_automorphisms_limit():
    with pytest.raises(SizeLimit):
        automorphisms(Digraph(4, set()), limit=3)


@given(st.integers(0, 2**32), st.integers(1, 5))
@settings(max_examples=60, deadline=None)
def test_automorphisms_match_exhaustive_search(seed, n):
    rng = random.Random(seed)
    d = Digraph(n, frozenset((y, x) for y in range(n) for x in range(n) if rng.random() < 0.4))
    expected = [f for f in all_permutations(n) if is_automorphism(d, f)]
    assert automorphisms(d) == sorted(expected)


def _random_model(seed, n):
    return random_extensional_digraph(random.Random(seed), n)


@given(st.integers(0, 2**32), st.integers(1, 5), st.data())
@settings(max_examples=40, deadline=None)
def test_boolean_operations_are_invariant_everywhere(seed, n, data):
    d = _random_model(seed, n)
    a = data.draw(st.integers(0, n - 1))
    b = data.draw(st.integers(0, n - 1))
    for text in ("~(y in a)", "y in a | y in b", "~(y in a & y in b)"):
        report = invariance_survey(d, parse(text), "y", {"a": a, "b": b}, {})
        assert report.verdict == "invariant", text
        assert report.permutations_tested == math.factorial(n)


@given(st.integers(0, 2**32), st.integers(1, 5), st.data())
@settings(max_examples=40, deadline=None)
def test_set_union_invariant_when_parameter_fixed(seed, n, data):
    d = _random_model(seed, n)
    A = data.draw(st.integers(0, n - 1))
    report = invariance_survey(d, parse("ex z. (z in A & y in z)"), "y", {"A": A}, {"A": 1})
    assert report.verdict == "invariant"


@given(st.integers(0, 2**32), st.integers(1, 5), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_compiled_evaluation_matches_naive(seed, n, fseed):
    from oracles import random_formula

    rng = random.Random(fseed)
    d = _random_model(seed, n)
    phi = random_formula(rng)
    f = Permutation(tuple(rng.sample(range(n), n)))
    env = {v: rng.randrange(n) for v in ("x", "y", "z")}
    assert evaluate(d, phi, env, f) == naive_eval(d, phi, env, f)
    assert evaluate(d, phi, env) == naive_eval(d, phi, env)


@given(st.integers(0, 2**32), st.integers(1, 5))
@settings(max_examples=40, deadline=None)
def test_automorphism_lifts_to_itself(seed, n):
    d = _random_model(seed, n)
    for f in automorphisms(d):
        assert j_lift(d, f) == f


def test_digraph_json_round_trip(tmp_path):
    d = digraph_from_extensions({0: (), 1: (0,)}, {0: "{}", 1: "{{}}"})
    p = tmp_path / "m.json"
    import json

    p.write_text(json.dumps(d.to_json()))
    e = Digraph.load(p)
    assert e == d and e.name(1) == "{{}}"
