import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dendro.dsets import (TablePresheaf, boundary, check_coskeletal, check_inner_kan, coskeleton,
                          coskeleton_unit, enumerate_presheaf_maps, inner_horn, remove_dendrices,
                          representable, simplicial_restriction, skeleton, yoneda_map)
from dendro.nerve import dendroidal_nerve
from dendro.operads import make_asA
from dendro.omega import automorphisms
from dendro.trees import canonical_code, corolla, linear, example_t3, tree_from_code

D, E = 2, 4


@pytest.fixture(scope="module")
def nerve_p():
    return dendroidal_nerve(make_asA("p"), D, E)


def test_representable_is_presheaf():
    X = representable(example_t3(), 3, 6)
    assert X.check_closure() == [] and X.check_functoriality() == []
    assert len(X.elements(canonical_code(example_t3()))) == len(automorphisms(example_t3()))


def test_boundary_misses_only_top():
    T = corolla(2)
    B, inc = boundary(T, D, E)
    X = inc.target
    code = canonical_code(T)
    assert inc.naturality_failures() == [] and inc.is_injective()
    assert len(B.elements(code)) == 0
    assert len(X.elements(code)) == 2
    assert B.elements("*") == X.elements("*")
    assert not inc.is_bijective()


def test_inner_horn_misses_one_face():
    T = linear(2)
    e = next(iter(T.inner_edges))
    H, inc = inner_horn(T, e, D, E)
    B, _ = boundary(T, D, E)
    c1 = canonical_code(corolla(1))
    assert len(B.elements(c1)) - len(H.elements(c1)) == 1
    assert H.total() < B.total()
    with pytest.raises(ValueError):
        inner_horn(T, T.root, D, E)


def test_representable_kan_and_coskeletal():
    X = representable(example_t3(), 3, 6)
    assert check_inner_kan(X, 3)["ok"]
    assert check_coskeletal(X, 2, 3)["ok"]


def test_nerve_kan_small(nerve_p):
    assert check_inner_kan(nerve_p)["ok"]
    assert check_coskeletal(nerve_p, 1, 1)["ok"]


def test_removing_a_filler_breaks_kan():
    X = dendroidal_nerve(make_asA("pq"), D, E)
    # binary operation with a unit plugged into one input; not degenerate
    code = "(()*)"
    victim = X.elements(code)[0]
    Y = remove_dendrices(X, code, [victim])
    assert Y.check_closure() == []
    assert Y.elements("*") == X.elements("*")
    rep = check_inner_kan(Y)
    assert not rep["ok"] and len(rep["unfilled"]) == 1


def test_table_roundtrip():
    X = representable(linear(2), D, E).to_table()
    assert TablePresheaf.from_json(X.to_json()).same_cells(X)


def test_skeleton_and_coskeleton(nerve_p):
    S = skeleton(nerve_p, 1)
    assert S.check_closure() == []
    # binary operations are not generated by edges
    assert 0 < S.total() < nerve_p.total()
    assert not check_coskeletal(nerve_p, 1, 2)["ok"]
    C = coskeleton(nerve_p, 2)
    u = coskeleton_unit(nerve_p, C)
    assert u.naturality_failures() == [] and u.is_bijective()


@settings(max_examples=10)
@given(st.sampled_from([corolla(0), corolla(1), corolla(2), linear(2)]))
def test_yoneda(T):
    X = dendroidal_nerve(make_asA("pq"), D, E)
    code = canonical_code(T)
    R = representable(tree_from_code(code), D, E)
    maps = enumerate_presheaf_maps(R, X)
    assert len(maps) == len(X.elements(code))
    for x in X.elements(code)[:3]:
        y = yoneda_map(X, code, x)
        assert y.naturality_failures() == []
        assert y in maps


def test_simplicial_restriction_identities(nerve_p):
    X = dendroidal_nerve(make_asA("pq"), 3, 6)
    S = simplicial_restriction(X)
    assert S.check_identities() == []
    assert S.sizes()[0] == 4
    assert S.check_inner_kan()["ok"]
