import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import shuffled_trees
from dendro.omega import (OmegaError, OmegaMap, automorphisms, compose, degeneracies_of, degeneracy,
                          dendroidal_identity_failures, edge_inclusion, enumerate_maps, faces_of,
                          identity, inner_face, lift, outer_face, subfaces)
from dendro.trees import corolla, linear, example_t3, trees_up_to, unit_tree

TINY = trees_up_to(2, 2)


def test_maps_between_small_trees():
    assert len(enumerate_maps(corolla(1), corolla(1))) == 3
    assert len(enumerate_maps(unit_tree(), corolla(3))) == 4
    # Delta: [1] -> [2] monotone maps
    assert len(enumerate_maps(linear(1), linear(2))) == 6


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_corolla_automorphisms(n):
    assert len(automorphisms(corolla(n))) == math.factorial(n)


def test_t3_faces():
    T = example_t3()
    fs = faces_of(T)
    assert all(f.is_mono() and f.source.degree == 2 for f in fs)
    assert len(fs) == len(T.inner_edges) + 2  # two outer top vertices, root not outer
    assert len({f.image_key() for f in fs}) == len(fs)


def test_degeneracy_needs_unary_vertex():
    with pytest.raises((OmegaError, ValueError)):
        degeneracy(corolla(2), "r")
    s = degeneracy(linear(2), linear(2).root)
    assert s.is_epi() and s.target.degree == 1


def test_inner_face_rejects_outer_edge():
    T = example_t3()
    with pytest.raises((OmegaError, ValueError)):
        inner_face(T, T.root)


def test_bad_edge_map_rejected():
    C = corolla(2)
    with pytest.raises(OmegaError):
        OmegaMap(C, C, {"r": "l0", "l0": "r", "l1": "l1"})


@given(shuffled_trees())
def test_faces_are_monos_and_degeneracies_epis(T):
    if T.degree == 0:
        with pytest.raises(OmegaError):
            faces_of(T)
        return
    for f in faces_of(T):
        assert f.is_mono() and not f.is_iso()
        assert f.source.degree == T.degree - 1
    for s in degeneracies_of(T):
        assert s.is_epi() and not s.is_iso()
        assert s.target.degree == T.degree - 1


@given(shuffled_trees())
def test_identity_failures_empty(T):
    assert dendroidal_identity_failures(T) == []


@given(shuffled_trees())
def test_outer_faces_remove_outer_vertices(T):
    for v in T.vertices:
        try:
            f = outer_face(T, v)
        except (OmegaError, ValueError):
            continue
        assert f.is_mono() and f.source.degree == T.degree - 1
        assert any(g == f for g in faces_of(T))


@given(st.sampled_from(TINY), st.sampled_from(TINY), st.sampled_from(TINY), st.data())
def test_composition_associative_and_unital(A, B, C, data):
    fs, gs = enumerate_maps(A, B), enumerate_maps(B, C)
    if not fs or not gs:
        return
    f, g = data.draw(st.sampled_from(fs)), data.draw(st.sampled_from(gs))
    hs = enumerate_maps(C, C)
    h = data.draw(st.sampled_from(hs))
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)
    assert compose(identity(B), f) == f == compose(f, identity(A))


@given(shuffled_trees(), st.data())
def test_lift_through_subface(T, data):
    subs = subfaces(T, max(T.degree - 1, 0))
    m = data.draw(st.sampled_from(subs))
    bs = enumerate_maps(m.source, m.source)
    b = data.draw(st.sampled_from(bs))
    assert lift(m, compose(m, b)) == b


def test_edge_inclusion_count():
    T = example_t3()
    assert len({edge_inclusion(T, e).image_key() for e in T.edges}) == len(T.edges)
    assert len(subfaces(T, 0)) == len(T.edges)
