import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakbcc.axioms import is_weak_bcc
from weakbcc.enumeration import (
    FILTERS,
    IsoCertificate,
    _all_canonical,
    are_isomorphic,
    canonical_algebra,
    canonical_form,
    enumerate_order,
    fingerprint,
    from_canonical,
    load_catalog,
    naive_enumerate,
    save_catalog,
)
from weakbcc.model import fixture_names, load_fixture, relabel


def _perm(n, rnd):
    rest = list(range(1, n))
    rnd.shuffle(rest)
    return [0] + rest


def _brute_iso(a, b):
    if a.order != b.order:
        return False
    for rest in itertools.permutations(range(1, a.order)):
        if relabel(a, (0,) + rest).table == b.table:
            return True
    return False


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 5), (4, 32)])
def test_counts(n, count):
    assert len(enumerate_order(n)) == count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pruned_equals_naive(n):
    assert set(_all_canonical(n, 1)) == naive_enumerate(n)


def test_catalog_members_are_distinct_weak_bcc(small_catalog):
    forms = [canonical_form(a) for a in small_catalog]
    assert len(set(forms)) == len(forms)
    for a in small_catalog:
        assert is_weak_bcc(a)
        assert canonical_form(a) == bytes(a.flat())


def test_catalog_pairs_not_isomorphic():
    algs = enumerate_order(3).algebras()
    for a, b in itertools.combinations(algs, 2):
        assert are_isomorphic(a, b) is None
        assert not _brute_iso(a, b)


def test_parallel_search_matches_serial():
    assert _all_canonical(4, 3) == _all_canonical(4, 1)


def test_filters():
    assert len(enumerate_order(4, "proper")) == 2
    for n in (1, 2, 3):
        assert len(enumerate_order(n, "proper")) == 0
    cat = enumerate_order(3, "bck")
    assert all(e.report.is_bck for e in cat)
    assert cat.filter == "bck"
    with pytest.raises(KeyError):
        enumerate_order(3, "shiny")
    with pytest.raises(ValueError):
        enumerate_order(0)
    assert set(FILTERS) == {"weakbcc", "bcc", "bck", "bci", "proper", "solid", "group-like", "condition-s"}


def test_custom_predicate():
    cat = enumerate_order(3, lambda a, r: r.is_bci)
    assert len(cat) == len(enumerate_order(3, "bci"))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(fixture_names()), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabeling(name, rnd):
    a = load_fixture(name)
    b = relabel(a, _perm(a.order, rnd))
    assert canonical_form(a) == canonical_form(b)
    assert fingerprint(a) == fingerprint(b)
    cert = are_isomorphic(a, b)
    assert cert is not None and cert.verify(a, b)


def test_canonical_algebra_is_a_relabeling(corpus):
    for a in corpus.values():
        c = canonical_algebra(a)
        assert bytes(c.flat()) == canonical_form(a)
        assert are_isomorphic(a, c) is not None
        assert from_canonical(canonical_form(a)).table == c.table


def test_iso_rejections(corpus, data_dir):
    from weakbcc.model import read_table

    assert are_isomorphic(corpus["Z2GL"], read_table(data_dir / "chain2.bcc")) is None
    assert are_isomorphic(corpus["EX31"], corpus["EX56"]) is None
    assert are_isomorphic(corpus["EX28"], corpus["EX31"]) is None


def test_bad_certificate(corpus):
    a = corpus["EX31"]
    assert IsoCertificate((0, 1, 2, 3, 4)).verify(a, a)
    assert not IsoCertificate((0, 2, 1, 3, 4)).verify(a, a)
    assert not IsoCertificate((1, 0, 2, 3, 4)).verify(a, a)


def test_save_and_load(tmp_path):
    cat = enumerate_order(3)
    d = save_catalog(cat, tmp_path)
    assert d.name == "order3"
    back = load_catalog(d)
    assert [x.table for x in back] == [x.table for x in cat.algebras()]
    # a bare directory of tables also loads
    (d / "index.json").unlink()
    assert sorted(x.table for x in load_catalog(d)) == sorted(x.table for x in cat.algebras())


def test_random_tables_iso_agrees_with_brute_force():
    rnd = random.Random(7)
    algs = enumerate_order(4).algebras()
    for _ in range(30):
        a = rnd.choice(algs)
        b = relabel(rnd.choice(algs), _perm(4, rnd))
        assert (are_isomorphic(a, b) is not None) == _brute_iso(a, b)
