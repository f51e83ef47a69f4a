import math

import pytest

from dendro.dsets import check_inner_kan, representable, simplicial_restriction
from dendro.fincat import arrow_category, chain_poset, find_isomorphism, group_groupoid
from dendro.nerve import (category_operad, dendroidal_nerve, induced_map, nerve_of_tensor,
                          tensor_inclusion_maps, tensor_projection_map)
from dendro.operads import asA_map, make_ass, omega_operad
from dendro.trees import canonical_code, corolla, example_t3

D, E = 2, 4


def test_ass_nerve_corolla_sizes():
    X = dendroidal_nerve(make_ass(), 3, 5)
    for n in range(4):
        assert len(X.elements(canonical_code(corolla(n)))) == math.factorial(n)


def test_omega_nerve_matches_representable():
    T = example_t3()
    X = dendroidal_nerve(omega_operad(T), 3, 6)
    R = representable(T, 3, 6)
    assert X.sizes() == R.sizes()


def test_nerve_functoriality():
    X = dendroidal_nerve(omega_operad(example_t3()), D, E)
    assert X.check_closure() == [] and X.check_functoriality() == []


def test_induced_map_of_set_function():
    P, Q, colour, op = asA_map({"p": "a", "q": "a"}, "pq", "a")
    X, Y = dendroidal_nerve(P, D, E), dendroidal_nerve(Q, D, E)
    f = induced_map(X, Y, colour, op)
    assert f.naturality_failures() == []
    assert not f.is_injective()


def test_tensor_maps_natural():
    X = nerve_of_tensor("p", D, E)
    pr = tensor_projection_map("p", X)
    assert pr.naturality_failures() == []
    incs = tensor_inclusion_maps("p", X)
    assert len(incs) == 3
    for m in incs:
        assert m.naturality_failures() == [] and m.is_injective()


def test_tensor_nerve_kan():
    assert check_inner_kan(nerve_of_tensor("p", D, E))["ok"]


@pytest.mark.parametrize("C", [chain_poset(3), arrow_category(), group_groupoid()], ids=lambda c: c.name)
def test_category_nerve_recovers_category(C):
    S = simplicial_restriction(dendroidal_nerve(category_operad(C), 3, 4))
    assert S.check_identities() == []
    ho, _ = S.homotopy_category()
    assert find_isomorphism(ho, C) is not None
