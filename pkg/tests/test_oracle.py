import random

import pytest

from conftest import edges_tree, path_tree
from maxmatch.oracle import count_maximal, covered_by_all, enumerate_maximal, is_maximal
from maxmatch.signs import psi, psi_forest
from maxmatch.tree_core import CapExceeded, RootedTree, TreeError, all_trees, random_tree, remove_vertex

K13 = edges_tree((0, 1), (0, 2), (0, 3))
P4 = path_tree(4)
E1, E2, E3, E4 = (0, 1), (1, 2), (2, 3), (3, 4)


def maximum_matching(t):
    """Match each still-free vertex to its free parent, bottom-up; optimal on trees."""
    rt = RootedTree.build(t, 0)
    matched, m = set(), []
    for v in rt.post_order:
        p = rt.parent[v]
        if p is not None and v not in matched and p not in matched:
            m.append((min(v, p), max(v, p)))
            matched.update((v, p))
    return m


class TestIsMaximal:
    def test_p4(self):
        assert not is_maximal(P4, [E1])
        assert is_maximal(P4, [E2])
        assert is_maximal(P4, [E1, E3])

    def test_not_a_matching(self):
        with pytest.raises(TreeError):
            is_maximal(P4, [E1, E2])
        with pytest.raises(TreeError):
            is_maximal(P4, [(0, 3)])

    @pytest.mark.parametrize("seed", range(30))
    def test_maximum_is_maximal(self, seed):
        t = random_tree(15, seed)
        m = maximum_matching(t)
        assert is_maximal(t, m)
        assert len(m) == max(len(x) for x in enumerate_maximal(t))


class TestEnumerate:
    def test_p4(self):
        assert list(enumerate_maximal(P4)) == [(E1, E3), (E2,)]

    def test_k13(self):
        assert sorted(enumerate_maximal(K13)) == [((0, 1),), ((0, 2),), ((0, 3),)]

    def test_p5(self):
        assert list(enumerate_maximal(path_tree(5))) == [(E1, E3), (E1, E4), (E2, E4)]

    def test_cap(self):
        with pytest.raises(CapExceeded):
            list(enumerate_maximal(path_tree(30)))
        assert count_maximal(path_tree(23), cap=23) == psi(path_tree(23))

    @pytest.mark.parametrize("n", range(2, 10))
    def test_valid_and_distinct(self, n):
        for t in all_trees(n):
            ms = list(enumerate_maximal(t))
            assert len(set(ms)) == len(ms)
            assert all(is_maximal(t, m) for m in ms)


class TestCount:
    def test_values(self):
        assert count_maximal(path_tree(6)) == 4
        assert count_maximal(path_tree(2)) == 1
        spider_222 = edges_tree((0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6))
        assert count_maximal(spider_222) == 4

    def test_random_trees_agree_with_dp(self):
        rng = random.Random(11)
        for _ in range(10_000):
            n = rng.randint(11, 18)
            t = random_tree(n, rng.randrange(2**32))
            assert count_maximal(t) == psi(t)


class TestCoveredByAll:
    def test_examples(self):
        assert covered_by_all(K13, 0)
        assert not covered_by_all(path_tree(5), 2)
        assert covered_by_all(path_tree(2), 0) and covered_by_all(path_tree(2), 1)

    @pytest.mark.parametrize("n", range(2, 11))
    def test_iff_leaf_neighbour(self, n):
        for t in all_trees(n):
            for v in range(n):
                has_leaf = any(len(t.adjacency[u]) == 1 for u in t.adjacency[v])
                assert covered_by_all(t, v) == has_leaf


@pytest.mark.parametrize("n", range(2, 10))
def test_vertex_deletion_never_increases_by_enumeration(n):
    for t in all_trees(n):
        total = count_maximal(t)
        for v in range(n):
            f = remove_vertex(t, v)
            assert count_maximal(f) == psi_forest(f) <= total
