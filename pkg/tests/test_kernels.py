import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nfstrat import _purekernels as pure
from nfstrat import kernels
from nfstrat.corpus import enumerate_conjunctions
from nfstrat.formula import encode_atoms

compiled = kernels.compiled
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


@st.composite
def atom_arrays(draw, max_atoms=8, max_vars=6):
    m = draw(st.integers(1, max_atoms))
    nvars = draw(st.integers(1, max_vars))
    kinds = draw(st.lists(st.integers(0, 1), min_size=m, max_size=m))
    lefts = draw(st.lists(st.integers(0, nvars - 1), min_size=m, max_size=m))
    rights = draw(st.lists(st.integers(0, nvars - 1), min_size=m, max_size=m))
    return kinds, lefts, rights, nvars


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")


def test_pure_worked_examples():
    # x in y & y in z & z in x
    assert pure.canonical_indices([1, 1, 1], [0, 1, 2], [1, 2, 0], 3) == [6, 7, 7, 8, 8, 9]
    # x in y & z in y & k in x & k in z
    assert pure.acyclic_indices([1] * 4, [0, 2, 3, 3], [1, 1, 0, 2], 4) == [1, 2, 3, 2, 2, 1, 4, 3]


def test_rng_total_counts_distinct_indices_per_variable():
    assert pure.rng_total([0, 1], [1, 0], [1, 2, 2, 3], 2) == 3


@needs_compiled
@given(atom_arrays())
@settings(max_examples=400)
def test_compiled_agrees_with_pure(arrays):
    kinds, lefts, rights, nvars = arrays
    for name in ("canonical_indices", "acyclic_indices"):
        a = list(getattr(pure, name)(kinds, lefts, rights, nvars))
        b = list(getattr(compiled, name)(kinds, lefts, rights, nvars))
        assert a == b, name
        assert pure.rng_total(lefts, rights, a, nvars) == compiled.rng_total(lefts, rights, a, nvars)


@needs_compiled
@given(atom_arrays(max_atoms=3, max_vars=4), st.integers(2, 7))
@settings(max_examples=100)
def test_compiled_bruteforce_agrees(arrays, bound):
    kinds, lefts, rights, nvars = arrays
    assert pure.min_rng_bruteforce(kinds, lefts, rights, nvars, bound) == compiled.min_rng_bruteforce(
        kinds, lefts, rights, nvars, bound
    )


@needs_compiled
def test_compiled_agrees_on_corpus():
    for f in enumerate_conjunctions(3, 4):
        kinds, lefts, rights, names = encode_atoms(f)
        args = (list(kinds), list(lefts), list(rights), len(names))
        assert list(pure.canonical_indices(*args)) == list(compiled.canonical_indices(*args))
        assert list(pure.acyclic_indices(*args)) == list(compiled.acyclic_indices(*args))


def test_env_var_forces_pure(monkeypatch):
    import importlib

    monkeypatch.setenv("NFSTRAT_PURE_PYTHON", "1")
    try:
        reloaded = importlib.reload(kernels)
        assert reloaded.BACKEND == "python"
    finally:
        monkeypatch.delenv("NFSTRAT_PURE_PYTHON")
        importlib.reload(kernels)
