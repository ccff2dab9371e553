import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import edges_tree, path_tree, subgraph
from maxmatch.oracle import count_maximal, enumerate_maximal
from maxmatch.signs import Sign, combine, compute_signs, psi, psi_forest, psi_split
from maxmatch.tree_core import Forest, RootedTree, Tree, all_trees, random_tree

K13 = edges_tree((0, 1), (0, 2), (0, 3))
SPIDER_222 = Tree.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def brute_path_psi(n):
    return count_maximal(path_tree(n))


class TestComputeSigns:
    def test_p2_rooted_at_far_end(self):
        table = compute_signs(RootedTree.build(path_tree(2), 1))
        assert table[1] == (0, 1, 1)
        assert table[0] == (1, 0, 1)

    def test_single_vertex(self):
        assert compute_signs(RootedTree.build(Tree.from_edges(1, []), 0))[0] == (1, 0, 1)

    def test_p4_rooted_at_end(self):
        # frozen from enumeration: {e1,e3} covers the end, {e2} does not; P_3 has 2
        table = compute_signs(RootedTree.build(path_tree(4), 3))
        assert table[3] == (1, 1, 2)
        assert table[2] == (1, 1, 1)
        assert table[1] == (0, 1, 1)

    def test_combine_matches_definition(self):
        kids = [Sign(1, 2, 3), Sign(0, 4, 1), Sign(2, 2, 2)]
        totals = [a + b for a, b, _ in kids]
        beta = sum(kids[i].gamma * totals[(i + 1) % 3] * totals[(i + 2) % 3] for i in range(3))
        assert combine(kids) == (2 * 4 * 2, beta, 3 * 4 * 4)
        assert combine([]) == (1, 0, 1)


class TestPsi:
    @pytest.mark.parametrize("m", [1, 2, 3, 10, 40])
    def test_star(self, m):
        assert psi(Tree.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])) == m

    def test_star_of_two_triples(self):
        edges = [(0, 1), (1, 2), (1, 3), (1, 4), (0, 5), (5, 6), (5, 7), (5, 8)]
        assert psi(Tree.from_edges(9, edges)) == 15

    def test_spider_222(self):
        assert psi(SPIDER_222) == 4

    def test_forest_product(self):
        assert psi_forest(Forest.of(path_tree(3), path_tree(3))) == 4
        t = random_tree(12, 3)
        assert psi_forest(Forest.of(Tree.from_edges(1, []), t)) == psi(t)
        assert psi_forest(Forest.of(path_tree(4), K13)) == 6
        assert psi_forest(Forest.of()) == 1

    def test_split(self):
        assert psi_split(path_tree(4), 0) == (1, 1)
        assert psi_split(K13, 0) == (0, 3)
        assert psi_split(SPIDER_222, 0) == (1, 3)


def test_path_values_against_enumeration():
    for n in range(1, 21):
        assert psi(path_tree(n)) == brute_path_psi(n)


def test_path_recurrence():
    values = [None] + [psi(path_tree(n)) for n in range(1, 1001)]
    assert values[1:4] == [1, 1, 2]
    for n in range(4, 1001):
        assert values[n] == values[n - 2] + values[n - 3]
    # grows past 64 bits; must stay exact
    assert values[1000].bit_length() > 64


@pytest.mark.parametrize("n", range(1, 10))
def test_sign_semantics_by_enumeration(n):
    """alpha/beta/gamma counted directly on every rooted subtree, every root."""
    for t in all_trees(n):
        for root in range(n):
            rt = RootedTree.build(t, root)
            table = compute_signs(rt)
            for v in range(n):
                sub, idx = subgraph(t, rt.subtree_vertices(v))
                matchings = list(enumerate_maximal(sub))
                covering = sum(any(idx[v] in e for e in m) for m in matchings)
                rest, _ = subgraph(t, [x for x in rt.subtree_vertices(v) if x != v])
                assert table[v] == (len(matchings) - covering, covering, count_maximal(rest))


@pytest.mark.parametrize("n", range(1, 11))
def test_oracle_equivalence(n):
    for t in all_trees(n):
        assert psi(t) == count_maximal(t)


@settings(max_examples=200)
@given(st.integers(1, 60), st.integers(0, 2**32), st.lists(st.integers(0, 59), min_size=1, max_size=5))
def test_root_invariance(n, seed, roots):
    t = random_tree(n, seed)
    assert len({psi(t, r % n) for r in roots} | {psi(t)}) == 1


def test_big_star_and_path_fast():
    n = 100_000
    star = Tree.from_edges(n, [(0, i) for i in range(1, n)])
    assert psi(star) == n - 1
    assert psi(path_tree(n)).bit_length() > 40_000
