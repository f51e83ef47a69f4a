import pytest
from hypothesis import given
from hypothesis import strategies as st

from dendro.fincat import (FinCat, arrow_category, chain_poset, discrete, enumerate_functors,
                           find_isomorphism, fixture_corpus, functor_from_spanning, group_groupoid,
                           hypercube, indiscrete, interval, monoid_category, product_cat, terminal)

CORPUS = fixture_corpus()


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_corpus_categories_valid(name):
    assert CORPUS[name].validate() == []


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_json_roundtrip(name):
    C = CORPUS[name]
    assert FinCat.from_json(C.to_json()) == C


def test_interval_laws():
    I = interval()
    assert I.check_laws() == []
    assert I.H.is_groupoid()
    assert len(I.H.morphisms) == 4


def test_broken_composition_detected():
    A = arrow_category()
    comp = dict(A.comp)
    comp[("id1", "f")] = "id0"
    bad = FinCat(A.objects, A.morphisms, {0: "id0", 1: "id1"}, comp)
    assert bad.validate()


def test_functor_counts():
    # monotone maps [1] -> [2]
    assert len(enumerate_functors(chain_poset(2), chain_poset(3))) == 6
    assert len(enumerate_functors(arrow_category(), arrow_category())) == 3
    Z2 = monoid_category(["e", "s"], lambda g, f: "e" if g == f else "s", "e")
    assert len(enumerate_functors(Z2, Z2)) == 2
    assert len(enumerate_functors(discrete("ab"), terminal())) == 1


def test_isomorphism_search():
    assert find_isomorphism(arrow_category(), chain_poset(2)) is not None
    assert find_isomorphism(interval().H, group_groupoid()) is None
    assert find_isomorphism(hypercube(1), interval().H) is not None


def test_product_sizes():
    P = product_cat([arrow_category(), interval().H])
    assert P.validate() == []
    assert len(P.objects) == 4 and len(P.morphisms) == 12


@given(st.integers(1, 3))
def test_indiscrete_is_groupoid(n):
    C = indiscrete(range(n))
    assert C.validate() == [] and C.is_groupoid()
    assert len(C.morphisms) == n * n


@given(st.sampled_from(sorted(CORPUS)), st.data())
def test_isos_have_inverses(name, data):
    C = CORPUS[name]
    f = data.draw(st.sampled_from(sorted(C.morphisms, key=repr)))
    if C.is_iso(f):
        g = C.inverse(f)
        assert C.compose(g, f) == C.id(C.src(f))


def test_spanning_extension():
    G = group_groupoid()
    F = functor_from_spanning(1, G, {(0,): "a", (1,): "b"}, {((0,), (1,)): ("a", "b", 1)})
    assert F is not None and F.validate() == []
    A = arrow_category()
    assert functor_from_spanning(1, A, {(0,): 0, (1,): 1}, {((0,), (1,)): "f"}) is None
