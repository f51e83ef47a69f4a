import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL_TREES
from dendro.operads import (TableOperad, bv_tensor_asA_c1, bv_tensor_oracle, check_operad_map,
                            enumerate_operad_maps, free_maps, make_asA, make_ass, omega_operad,
                            tensor_inclusions, tensor_projection_asA, validate_operad)
from dendro.trees import corolla, example_t3


@pytest.mark.parametrize("P", [make_asA("p"), make_asA("pq"), make_ass(), omega_operad(example_t3()),
                               bv_tensor_asA_c1("p")], ids=repr)
def test_laws_hold(P):
    assert validate_operad(P, 3) == []


def test_ass_has_n_factorial_operations():
    P = make_ass()
    c = P.colours[0]
    for n in range(5):
        assert len(P.ops((c,) * n, c)) == math.factorial(n)


def test_asA_signatures():
    P = make_asA("pq")
    assert len(P.ops((("p", "q"), ("q", "p")), ("p", "p"))) == 1
    assert len(P.ops((("q", "p"), ("p", "q")), ("p", "p"))) == 1
    assert P.ops((("p", "q"), ("p", "q")), ("p", "q")) == ()
    assert len(P.ops((), ("p", "p"))) == 1
    assert P.ops((), ("p", "q")) == ()


def test_omega_t3_operations_are_subtrees():
    T = example_t3()
    P = omega_operad(T)
    assert P.ops((T.root,), T.root) == ("id",)
    top = P.ops(tuple(sorted(T.leaves)), T.root)
    assert top == (frozenset(T.vertices),)


@given(st.sampled_from(SMALL_TREES))
def test_maps_into_ass_count(T):
    # one colour: each vertex of arity k picks one of k! orderings
    want = math.prod(math.factorial(T.arity(v)) for v in T.vertices)
    assert len(free_maps(T, make_ass())) == want


def test_maps_from_omega_match_free_maps():
    C2 = corolla(2)
    assert len(enumerate_operad_maps(omega_operad(C2), make_ass())) == 2


def test_tensor_structure_maps():
    src, tgt, colour, op = tensor_projection_asA("pq")
    assert check_operad_map(src, tgt, colour, op, 3) == []
    for P, Q, colour, op in tensor_inclusions("pq"):
        assert check_operad_map(P, Q, colour, op, 3) == []


def test_tensor_level_rule():
    P = bv_tensor_asA_c1("p")
    pp = ("p", "p")
    assert len(P.ops(((pp, 0),), (pp, 1))) == 0
    assert len(P.ops(((pp, 1),), (pp, 0))) == 1
    assert len(P.ops(((pp, 1), (pp, 0)), (pp, 0))) == 2


def test_oracle_small_agrees():
    P = bv_tensor_asA_c1("pq")
    oracle = bv_tensor_oracle("pq", 3, 3)
    for sig, nfs in oracle.items():
        assert len(nfs) == 1 and P.admissible(*sig)
    for n in range(4):
        for sig in P.planar_sigs(n):
            assert sig in oracle


def test_oracle_bounds():
    with pytest.raises(ValueError):
        bv_tensor_oracle("pqrs", 2, 2)


def test_table_roundtrip_and_broken_table():
    T = make_asA("p").to_table(2)
    back = TableOperad.from_json(T.to_json())
    assert validate_operad(back, 2) == []
    pp = ("p", "p")
    comp = dict(back.comp)
    key = next(k for k in comp if k[0] == ((pp,), pp))
    comp[key] = "junk"
    broken = TableOperad(back.colours, back._ops, back._units, comp, back.sym)
    assert validate_operad(broken, 2)
