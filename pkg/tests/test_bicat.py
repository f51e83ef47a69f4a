import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dendro.bicat import (EdgeDendrex, LevelRecord, Sig, UnbiasedBicategory, UnbiasedHom,
                          VertexDendrex, all_signatures, bicat_corpus, classical_to_unbiased,
                          compose_homs, compose_sig, degenerate_edge, enumerate_homs,
                          enumerate_unbiased, enumerate_vertex_dendrices, identity_classical_hom,
                          identity_hom, left_homotopic, pentagon_mutant, phi_hom, phi_object,
                          recover_hom, unbiased_from_vertex, validate_classical,
                          validate_classical_hom, validate_hom, validate_unbiased)
from dendro.fincat import chain_poset

CORPUS = bicat_corpus()
N = 3


@pytest.fixture(scope="module")
def unbiased():
    return {k: classical_to_unbiased(B, N) for k, B in CORPUS.items()}


@pytest.fixture(scope="module")
def pair(unbiased):
    A, B = unbiased["chain"], unbiased["chain_2obj"]
    xA, xB = phi_object(A), phi_object(B)
    return A, B, xA, xB, enumerate_homs(A, B)


def test_signature_counts():
    # one object: arities 0..2 at level 0
    assert len(all_signatures(["*"], 0, 2)) == 3
    # levels 0, 1: outputs may sit at most at the lowest input level
    assert len(all_signatures(["*"], 1, 2)) == 10
    assert len(all_signatures(["a", "b"], 0, 2)) == 14


def test_compose_sig():
    s = Sig(("a", "b", "c"), (0, 0), 0)
    r = Sig(("a", "d", "b"), (0, 0), 0)
    assert compose_sig(s, 0, r) == Sig(("a", "d", "b", "c"), (0, 0, 0), 0)
    assert compose_sig(s, 1, r) is None


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_corpus_coherent(name):
    B = CORPUS[name]
    assert validate_classical(B) == []
    assert validate_classical_hom(identity_classical_hom(B)) == []


def test_pentagon_mutant_rejected():
    errs = validate_classical(pentagon_mutant())
    assert any("pentagon" in e for e in errs)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_unbiased_and_vertex(name, unbiased):
    U = unbiased[name]
    assert validate_unbiased(U) == []
    assert U.strict_unit()
    x = phi_object(U)
    assert isinstance(x, VertexDendrex) and x.validate() == []
    assert unbiased_from_vertex(x) == U
    assert VertexDendrex.from_json(x.to_json()) == x
    assert UnbiasedBicategory.from_json(U.to_json()) == U


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_identity_hom_gives_degenerate_edge(name, unbiased):
    U = unbiased[name]
    x = phi_object(U)
    I = identity_hom(U)
    assert validate_hom(I) == []
    y = phi_hom(I, x, x)
    assert y == degenerate_edge(x)
    assert y.validate() == []
    assert EdgeDendrex.from_json(y.to_json()) == y


def test_homs_roundtrip(pair):
    A, B, xA, xB, homs = pair
    assert len(homs) == 4
    for H in homs:
        assert validate_hom(H) == []
        assert compose_homs(identity_hom(A), H) == H == compose_homs(H, identity_hom(B))
        assert UnbiasedHom.from_json(H.to_json(), A, B) == H
        y = phi_hom(H, xA, xB)
        assert y.validate() == []
        assert recover_hom(y, A, B) == H


def test_broken_hom_detected():
    Z = classical_to_unbiased(CORPUS["z2"], 2)
    flip = {"e": "s", "s": "e"}
    for H in enumerate_homs(Z, Z):
        for key, comps in H.theta.items():
            x = next(iter(comps))
            bad = UnbiasedHom(Z, Z, H.f, H.F, {**H.theta, key: {**comps, x: flip[comps[x]]}})
            assert validate_hom(bad)


def test_broken_record_detected(unbiased):
    x = phi_object(unbiased["codiscrete"])
    key = next(k for k, v in x.phi.items() if len(v) > 1)
    comps = dict(x.phi[key])
    k0, k1 = list(comps)[:2]
    comps[k0], comps[k1] = comps[k1], comps[k0]
    bad = LevelRecord(x.objects, x.top, x.cats, x.psi, {**x.phi, key: comps}, x.N)
    assert bad.validate()


@settings(max_examples=8)
@given(st.integers(0, 3))
def test_left_homotopy_reflexive_with_witness(k):
    A = classical_to_unbiased(CORPUS["chain"], N)
    B = classical_to_unbiased(CORPUS["chain_2obj"], N)
    xA, xB = phi_object(A), phi_object(B)
    H = enumerate_homs(A, B)[k]
    y = phi_hom(H, xA, xB)
    ok, w = left_homotopic(y, y)
    assert ok and w.validate() == []
    assert w.restrict((0, 2)) == y.record
    assert w.restrict((0, 1)) == y.record
    assert w.restrict((1, 2)) == degenerate_edge(xA).record


def test_homotopy_needs_same_endpoints(pair):
    A, B, xA, xB, homs = pair
    y = phi_hom(homs[0], xA, xB)
    with pytest.raises(ValueError):
        left_homotopic(y, degenerate_edge(xA))


def test_vertex_dendrices_are_unbiased_bicategories():
    homs = {("*", "*"): chain_poset(2)}
    U = enumerate_unbiased(["*"], homs, 3)
    V = enumerate_vertex_dendrices(["*"], homs, 3)
    img = [phi_object(u) for u in U]
    assert len(U) == len(V) == 2
    assert all(not (a == b) for i, a in enumerate(img) for b in img[i + 1:])
    assert all(any(v == x for x in img) for v in V)
