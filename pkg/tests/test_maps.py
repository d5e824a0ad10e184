import pytest
from hypothesis import given, strategies as st

from operadlab.combinatorics import inverse, permutations, swap_adjacent
from operadlab.errors import PositionError, ResourceLimitError
from operadlab.maps import (
    MAPS,
    fibers,
    independent_positions,
    loday_ronco,
    phihat,
    tonks_classes,
    tonks_independent,
    tonks_map,
    varphi,
)
from operadlab.trees import COROLLA, LEAF, catalan, graft_root, parse_tree

from oracles import cartesian_tree, gap_merge_tree

perms = st.integers(0, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def test_small_values():
    for f in MAPS.values():
        assert f(()) == LEAF
        assert f((1,)) == COROLLA


def test_psi_example_is_grafting():
    expected = graft_root(loday_ronco((1,)), loday_ronco((1, 2)))
    assert loday_ronco((2, 4, 1, 3)) == expected == parse_tree("((*,*),((*,*),*))")


def test_tonks_collapses_132_and_312():
    assert tonks_map((1, 3, 2)) == tonks_map((3, 1, 2)) == parse_tree("((*,*),(*,*))")
    assert loday_ronco((1, 3, 2)) == loday_ronco((2, 3, 1))


@given(perms)
def test_all_tonks_recursions_agree(pi):
    tree = tonks_map(pi)
    assert phihat(pi) == varphi(pi) == MAPS["g"](pi) == tree == gap_merge_tree(pi)
    assert loday_ronco(pi) == cartesian_tree(pi)
    assert tree == loday_ronco(inverse(pi))
    assert tree.internal_nodes == len(pi)


@pytest.mark.parametrize("perm, i, expected", [
    ((1, 3, 2), 1, True),
    ((3, 1, 2), 1, True),
    ((2, 1, 3), 1, False),
    ((1, 2, 3), 2, False),
    ((2, 4, 1, 3), 1, True),
])
def test_independence_examples(perm, i, expected):
    assert tonks_independent(perm, i) is expected


def test_independence_position_range():
    with pytest.raises(PositionError):
        tonks_independent((1, 2, 3), 3)
    with pytest.raises(PositionError):
        tonks_independent((1, 2, 3), 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_independent_swap_preserves_tonks_image(n):
    for pi in permutations(n):
        for i in independent_positions(pi):
            assert tonks_map(swap_adjacent(pi, i)) == tonks_map(pi)


def test_n3_partition():
    part = tonks_classes(3)
    assert [list(c) for c in part.classes] == [
        [(1, 2, 3)], [(1, 3, 2), (3, 1, 2)], [(2, 1, 3)], [(2, 3, 1)], [(3, 2, 1)],
    ]
    assert part.class_of((3, 1, 2)) == ((1, 3, 2), (3, 1, 2))
    assert part.representatives()[1] == (1, 3, 2)
    assert part.tree_of_class()[((1, 3, 2), (3, 1, 2))] == parse_tree("((*,*),(*,*))")
    psi = fibers(loday_ronco, 3)
    assert [c for c in psi if len(c) > 1] == [((1, 3, 2), (2, 3, 1))]


@pytest.mark.parametrize("n", range(0, 8))
def test_classes_are_fibers_and_counted_by_catalan(n):
    part = tonks_classes(n)
    assert len(part) == catalan(n)
    assert sorted(part.classes) == fibers(tonks_map, n)
    assert len(set(part.trees)) == len(part)
    assert sum(len(c) for c in part.classes) == len(list(permutations(n)))
    assert all(part.class_index(c[0]) == k for k, c in enumerate(part.classes))


def test_tonks_classes_limits():
    assert len(tonks_classes(4)) == 14
    with pytest.raises(ResourceLimitError):
        tonks_classes(9)
    with pytest.raises(ValueError):
        tonks_classes(-1)
