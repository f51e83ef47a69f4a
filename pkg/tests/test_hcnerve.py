import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dendro.hcnerve import (IncompatibleFamily, WCat1Dendrex, boundary_family, case_tag,
                            count_top_extensions, degree3_fixtures, degree3_shapes, face_action,
                            nat_isos, reconstruct_from_2skeleton, strict_dendrex,
                            validate_wcat1_dendrex, w_operad)
from dendro.omega import compose, degeneracy, faces_of, outer_face
from dendro.trees import corolla, graft, example_t3

FIXTURES = degree3_fixtures(24)


def test_fixtures_valid_and_varied():
    assert len(FIXTURES) == 24
    assert all(validate_wcat1_dendrex(d) == [] for d in FIXTURES)
    assert len({case_tag(d.tree) for d in FIXTURES}) >= 2
    # some isos are not identities
    assert any(not n.is_identity() for d in FIXTURES for n in d.phi.values())


def test_w_operad_associative():
    assert w_operad(example_t3()).check_associativity() == []
    for T in degree3_shapes():
        assert w_operad(T).check_associativity() == []


@settings(max_examples=20)
@given(st.sampled_from(FIXTURES))
def test_json_roundtrip(d):
    assert WCat1Dendrex.from_json(d.to_json()) == d


@settings(max_examples=20)
@given(st.sampled_from(FIXTURES))
def test_faces_valid_and_simplicial(d):
    for f in faces_of(d.tree):
        r = face_action(d, f)
        assert validate_wcat1_dendrex(r) == []
        if f.source.degree == 0:
            continue
        for g in faces_of(f.source):
            assert face_action(r, g) == face_action(d, compose(f, g))


@settings(max_examples=20)
@given(st.sampled_from(FIXTURES), st.data())
def test_degeneracy_then_face_is_identity(d, data):
    f = data.draw(st.sampled_from([g for g in faces_of(d.tree) if g.source.leaves]))
    r = face_action(d, f)
    R = r.tree
    leaf = data.draw(st.sampled_from(sorted(R.leaves)))
    R2 = graft(R, leaf, corolla(1))
    s = degeneracy(R2, leaf)
    assert s.target == R
    x = face_action(r, s)
    assert validate_wcat1_dendrex(x) == []
    assert face_action(x, outer_face(R2, leaf)) == r


@settings(max_examples=24)
@given(st.sampled_from(FIXTURES))
def test_reconstruction(d):
    fam = boundary_family(d)
    assert reconstruct_from_2skeleton(d.tree, fam) == d
    assert count_top_extensions(d.tree, fam) == 1


def test_reconstruction_rejects_bad_family():
    d = FIXTURES[0]
    fam = boundary_family(d)
    with pytest.raises(IncompatibleFamily):
        reconstruct_from_2skeleton(d.tree, dict(list(fam.items())[:-1]))
    with pytest.raises(ValueError):
        reconstruct_from_2skeleton(faces_of(d.tree)[0].source, {})


def test_broken_iso_detected():
    d = next(d for d in FIXTURES if any(len(nat_isos(n.F, n.G)) > 1 for n in d.phi.values()))
    key, n = next((k, n) for k, n in d.phi.items() if len(nat_isos(n.F, n.G)) > 1)
    alt = next(m for m in nat_isos(n.F, n.G) if m.comps != n.comps)
    bad = WCat1Dendrex(d.tree, d.cats, d.G, {**d.phi, key: alt})
    assert validate_wcat1_dendrex(bad)


def test_strict_dendrex_has_identity_isos():
    T = degree3_shapes()[0]
    d = next(x for x in FIXTURES if x.tree == T)
    vf = {v: d.G[frozenset([v])] for v in T.vertices}
    s = strict_dendrex(T, {e: d.cats[e] for e in T.edges}, vf)
    assert validate_wcat1_dendrex(s) == []
    assert all(n.is_identity() for n in s.phi.values())
