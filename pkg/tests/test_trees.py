import pickle

import pytest
from hypothesis import given, strategies as st

from operadlab.errors import LeafIndexError, ParseError, ResourceLimitError, SizeMismatchError
from operadlab.trees import (
    COROLLA,
    LEAF,
    Node,
    catalan,
    enumerate_trees,
    graft_at,
    graft_root,
    left_comb,
    parse_tree,
    right_comb,
    rotations,
    tamari_leq,
    tamari_upset,
)

from oracles import catalan_by_recurrence, string_graft, tamari_leq_by_vectors

T = parse_tree

trees = st.recursive(st.just(LEAF), lambda sub: st.builds(Node, sub, sub), max_leaves=12)


@pytest.mark.parametrize("t1, t2, expected", [
    ("*", "*", "(*,*)"),
    ("(*,*)", "*", "((*,*),*)"),
    ("*", "(*,*)", "(*,(*,*))"),
])
def test_graft_root_examples(t1, t2, expected):
    assert str(graft_root(T(t1), T(t2))) == expected


@pytest.mark.parametrize("t, i, s, expected", [
    ("(*,*)", 1, "(*,*)", "((*,*),*)"),
    ("(*,*)", 2, "(*,*)", "(*,(*,*))"),
    ("*", 1, "((*,*),(*,*))", "((*,*),(*,*))"),
])
def test_graft_at_examples(t, i, s, expected):
    assert str(graft_at(T(t), i, T(s))) == expected


@pytest.mark.parametrize("i", [0, 3])
def test_graft_at_leaf_out_of_range(i):
    with pytest.raises(LeafIndexError):
        graft_at(COROLLA, i, COROLLA)


@pytest.mark.parametrize("t, expected", [
    ("((*,*),*)", {"(*,(*,*))"}),
    ("(*,(*,*))", set()),
    ("(((*,*),*),*)", {"((*,(*,*)),*)", "((*,*),(*,*))"}),
])
def test_rotations_examples(t, expected):
    assert {str(r) for r in rotations(T(t))} == expected


def test_tamari_leq_examples():
    assert tamari_leq(T("(((*,*),*),*)"), T("(*,(*,(*,*)))"))
    t = T("((*,*),(*,*))")
    assert tamari_leq(t, t)
    assert not tamari_leq(T("(*,(*,*))"), T("((*,*),*)"))
    with pytest.raises(SizeMismatchError):
        tamari_leq(COROLLA, LEAF)


@pytest.mark.parametrize("n, count", [(0, 1), (3, 5), (4, 14)])
def test_enumerate_examples(n, count):
    ys = enumerate_trees(n)
    assert len(ys) == count
    if n == 0:
        assert ys == [LEAF]


def test_enumerate_limit():
    with pytest.raises(ResourceLimitError):
        enumerate_trees(13)
    assert len(enumerate_trees(13, max_n=13)) == 742900


@pytest.mark.parametrize("n", range(0, 9))
def test_catalan_counts_and_distinctness(n):
    ys = enumerate_trees(n)
    assert len(set(ys)) == len(ys) == catalan(n) == catalan_by_recurrence(n)
    assert all(t.internal_nodes == n and t.leaves == n + 1 for t in ys)
    assert ys[0] == left_comb(n) and ys[-1] == right_comb(n)


def test_enumeration_order_is_stable():
    assert [str(t) for t in enumerate_trees(3)] == [
        "(((*,*),*),*)", "((*,(*,*)),*)", "((*,*),(*,*))", "(*,((*,*),*))", "(*,(*,(*,*)))",
    ]


@given(trees)
def test_text_round_trip(t):
    assert parse_tree(str(t)) == t
    assert pickle.loads(pickle.dumps(t)) == t


@pytest.mark.parametrize("bad", ["", "(*,*", "(*;*)", "**", "(*,*))", "x"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_tree(bad)


@given(trees, st.data())
def test_graft_adds_nodes_and_matches_string_surgery(t, data):
    s = data.draw(trees)
    i = data.draw(st.integers(1, t.leaves))
    g = graft_at(t, i, s)
    assert g.internal_nodes == t.internal_nodes + s.internal_nodes
    assert str(g) == string_graft(str(t), i, str(s))


@given(trees, trees)
def test_graft_root_compatibility(t1, t2):
    assert graft_root(t1, t2) == graft_at(graft_at(COROLLA, 2, t2), 1, t1)


@given(trees)
def test_rotations_preserve_size(t):
    assert all(r.internal_nodes == t.internal_nodes for r in rotations(t))


@pytest.mark.parametrize("n", range(0, 8))
def test_unique_minimum_and_maximum(n):
    ys = enumerate_trees(n)
    covered = {r for t in ys for r in rotations(t)}
    assert [t for t in ys if t not in covered] == [left_comb(n)]
    assert [t for t in ys if not rotations(t)] == [right_comb(n)]


@pytest.mark.parametrize("n", range(0, 7))
def test_tamari_is_partial_order(n):
    ys = enumerate_trees(n)
    for a in ys:
        up = tamari_upset(a)
        assert a in up
        for b in up:
            assert tamari_upset(b) <= up
            if b != a:
                assert a not in tamari_upset(b)


@pytest.mark.parametrize("n", range(0, 6))
def test_tamari_matches_right_arm_vectors(n):
    ys = enumerate_trees(n)
    for a in ys:
        for b in ys:
            assert tamari_leq(a, b) == tamari_leq_by_vectors(a, b)


def test_substitution_into_leaf_context_is_monotone():
    small = [t for k in range(5) for t in enumerate_trees(k)]
    for k in range(5):
        pairs = [(s1, s2) for s1 in enumerate_trees(k) for s2 in enumerate_trees(k)
                 if tamari_leq(s1, s2)]
        for t in small:
            for i in range(1, t.leaves + 1):
                for s1, s2 in pairs:
                    assert tamari_leq(graft_at(t, i, s1), graft_at(t, i, s2))


def test_trees_are_immutable():
    with pytest.raises(AttributeError):
        COROLLA.left = COROLLA
