import pytest

from nfstrat.corpus import (
    _growth_strings,
    compare,
    enumerate_conjunctions,
    index_bound_violations,
    minimality_sweep,
)
from nfstrat.errors import SizeLimit
from nfstrat.formula import render, variables


def bell_prefix(length, k):
    return sum(1 for _ in _growth_strings(length, k))


def test_growth_strings_count_set_partitions():
    # partitions of 4 into at most 4 blocks: Bell(4) = 15; into at most 2 blocks: 8
    assert bell_prefix(4, 4) == 15
    assert bell_prefix(4, 2) == 8


def test_corpus_sizes():
    # per atom count m: 2^m kind choices times partitions of 2m slots into <= 4 blocks
    assert sum(1 for _ in enumerate_conjunctions(1, 4)) == 2 * 2
    assert sum(1 for _ in enumerate_conjunctions(3, 4)) == 1560
    assert sum(1 for _ in enumerate_conjunctions(4, 4)) == 46280


def test_corpus_has_no_renamings():
    seen = set()
    for f in enumerate_conjunctions(3, 3):
        text = render(f)
        assert text not in seen
        seen.add(text)
        vs = variables(f)
        assert vs == [f"v{i}" for i in range(len(vs))]


def test_corpus_size_guard():
    with pytest.raises(SizeLimit):
        list(enumerate_conjunctions(7, 4))


def test_compare_small():
    report = compare(3, 3)
    assert report.ok
    out = report.to_json()
    assert out["canonical_vs_oracle_disagreements"] == []
    assert out["acyclic_but_unstratified"] == []


def test_index_bound_holds_on_small_corpus():
    assert index_bound_violations(3, 4) == []


def test_minimality_sweep_reports_mismatches_on_unstratified_only():
    from nfstrat.formula import parse
    from nfstrat.stratify import is_stratified

    report = minimality_sweep(2, 3)
    for text, canon, brute in report.mismatches:
        assert canon > brute
        assert not is_stratified(parse(text))
