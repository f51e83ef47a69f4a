import pytest

from dendro.dsets import PresheafMap, check_inner_kan
from dendro.groth import (MeetSemilattice, asA_diagram, chain, diagram_corpus, groth,
                          inn_object, uniqueness_chain)
from dendro.trees import corolla

E = 3


@pytest.fixture(scope="module")
def corpus():
    return diagram_corpus(E)


def top_map(G):
    X = G.diagram.values[G.diagram.S.top]
    comps = {c: {e: G.top_component(c, e) for e in v} for c, v in G.cells.items()}
    return PresheafMap(G, X, comps)


def test_semilattice_rejects_missing_meet():
    # two incomparable minimal elements below a top
    rel = {("a", "a"), ("b", "b"), ("t", "t"), ("a", "t"), ("b", "t")}
    with pytest.raises(ValueError):
        MeetSemilattice(["a", "b", "t"], lambda x, y: (x, y) in rel)


def test_semilattice_laws():
    S = chain(3)
    assert S.check() == []
    assert S.meet([2, 0, 1]) == 0 and S.meet([]) == 2
    assert MeetSemilattice.from_json(S.to_json()).meet_table == S.meet_table


def test_inn_of_corolla_is_meet():
    S = chain(3)
    # a corolla coloured 1, 2 at the leaves
    from dendro.operads import FreeOperadMap
    C = corolla(2)
    t = FreeOperadMap(C, {"r": 0, "l1": 1, "l2": 2}, {"r": ()})
    assert inn_object(S, t) == 1


def test_corpus_diagrams_valid(corpus):
    for D in corpus.values():
        assert D.check() == []


def test_non_functorial_diagram_detected():
    S = chain(3)
    D = asA_diagram(S, {0: "pq", 1: "pq", 2: "p"},
                    {(0, 1): {"p": "q", "q": "p"}, (1, 2): {"p": "p"}, (0, 2): {"p": "p"}}, max_edges=2)
    assert D.check()


def test_terminal_base_is_value(corpus):
    G = groth(corpus["terminal"])
    f = top_map(G)
    assert f.naturality_failures() == []
    assert f.is_bijective()


def test_chain2_structure(corpus):
    G = groth(corpus["chain2"])
    assert G.check_closure() == [] and G.check_functoriality() == []
    assert G.projection().naturality_failures() == []
    assert check_inner_kan(G)["ok"]
    assert uniqueness_chain(G)["ok"]


def test_unit_shape_elements(corpus):
    G = groth(corpus["chain2"])
    # an edge of the total space is an object s with an edge of X(s)
    D = corpus["chain2"]
    assert len(G.elements("*")) == sum(len(D.values[s].elements("*")) for s in D.S.elements)
