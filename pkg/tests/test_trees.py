import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL_TREES, shuffled_trees
from dendro.trees import (Tree, TreeError, canonical_code, canonical_form, corolla, graft, linear,
                          example_t3, subtree, tree_from_code, trees_up_to, unit_tree)


def test_codes_of_basic_trees():
    assert canonical_code(unit_tree()) == "*"
    assert canonical_code(corolla(0)) == "()"
    assert canonical_code(corolla(3)) == "(***)"
    assert canonical_code(linear(3)) == "(((*)))"
    assert canonical_code(linear(1)) == "(*)"


def test_t3_shape():
    T = example_t3()
    assert T.degree == 3
    assert len(T.leaves) == 3
    assert len(T.inner_edges) == 2


def test_malformed_trees_rejected():
    with pytest.raises(TreeError):
        Tree("a", {"a": ["b"], "b": ["a"]})
    with pytest.raises(TreeError):
        Tree("a", {"a": ["b", "b"]})
    with pytest.raises(TreeError):
        graft(corolla(2), "nope", corolla(1))


def test_enumeration_has_no_duplicates():
    codes = [canonical_code(T) for T in trees_up_to(4, 4)]
    assert len(codes) == len(set(codes))


def test_enumeration_counts_small():
    # brute force: close {unit} under grafting corollas onto leaves
    frontier = {canonical_code(unit_tree())}
    seen = set(frontier)
    for _ in range(2):
        nxt = set()
        for code in frontier:
            T = tree_from_code(code)
            for n in range(3):
                nxt.add(canonical_code(_top_graft(T, n)))
                for l in T.leaves:
                    nxt.add(canonical_code(graft(T, l, corolla(n))))
        frontier = nxt - seen
        seen |= nxt
    want = {c for c in seen if tree_from_code(c).degree <= 2 and tree_from_code(c).max_arity() <= 2}
    got = {canonical_code(T) for T in trees_up_to(2, 2)}
    assert got == want


def _top_graft(T, n):
    # put T under a new root vertex of arity n + 1
    C = corolla(n + 1, root="R", leaves=[f"l{i}" for i in range(n + 1)])
    return graft(C, "l0", T)


@given(shuffled_trees())
def test_code_invariant_under_relabelling(T):
    assert canonical_code(T) == canonical_code(tree_from_code(canonical_code(T)))


@given(shuffled_trees())
def test_canonical_form_is_iso(T):
    rep, iso = canonical_form(T)
    assert rep == tree_from_code(canonical_code(T))
    assert set(iso.values()) == set(T.edges)
    assert T.relabel({v: k for k, v in iso.items()}) == rep


@given(shuffled_trees(), shuffled_trees())
def test_graft_adds_degree(S, R):
    for l in sorted(S.leaves)[:1]:
        G = graft(S, l, R)
        assert G.degree == S.degree + R.degree
        assert len(G.edges) == len(S.edges) + len(R.edges) - 1


@given(st.sampled_from(SMALL_TREES))
def test_json_roundtrip(T):
    assert Tree.from_json(T.to_json()) == T


def test_subtree_of_t3():
    T = example_t3()
    S = subtree(T, T.root, T.leaves)
    assert S == T
