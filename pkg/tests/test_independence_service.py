"""Tests for independence number, maximum independent set enumeration and SUMI decisions."""
import random
from itertools import combinations

import networkx as nx
import pytest

from annihilator.domain.errors import EnumerationBudgetExceeded, NotATreeError
from annihilator.domain.models import VertexSet
from annihilator.services.family_service import fixed
from annihilator.services.graph_service import graph_from_edges
from annihilator.services.independence_service import (
    alpha_bruteforce,
    enumerate_maximum_independent_sets,
    independence_number,
    is_independent,
    is_independent_vertex_cover,
    is_sumi_graph,
    is_vertex_cover,
    sumi_tree_leaf_check,
    unique_maximum_independent_set,
)


class TestIndependenceNumber:
    """Test exact alpha."""

    def test_known_values(self, k4, path5, cycle5, petersen):
        """Test alpha of small named graphs."""
        assert independence_number(k4) == 1
        assert independence_number(path5) == 3
        assert independence_number(cycle5) == 2
        assert independence_number(petersen) == 4

    def test_edgeless(self):
        """Test every vertex of an edgeless graph is independent."""
        assert independence_number(graph_from_edges(6, [])) == 6
        assert independence_number(graph_from_edges(0, [])) == 0

    def test_agrees_with_bruteforce(self, random_graphs):
        """Test alpha against the exhaustive oracle."""
        for g in random_graphs:
            assert independence_number(g) == alpha_bruteforce(g)

    def test_agrees_with_networkx(self, random_graphs, to_networkx, complement_clique_number):
        """Test alpha as the clique number of the complement."""
        for g in random_graphs:
            assert independence_number(g) == complement_clique_number(to_networkx(g))


@pytest.fixture
def complement_clique_number():
    def clique_number(h: nx.Graph) -> int:
        return max(len(c) for c in nx.find_cliques(nx.complement(h)))
    return clique_number


class TestEnumeration:
    """Test Omega enumeration."""

    def test_cycle5(self, cycle5):
        """Test C5 has five maximum independent sets."""
        family = enumerate_maximum_independent_sets(cycle5)
        assert family.alpha == 2
        assert len(family) == 5

    def test_petersen(self, petersen):
        """Test the Petersen graph has five maximum independent sets."""
        assert len(enumerate_maximum_independent_sets(petersen)) == 5

    def test_path_unique(self, path5):
        """Test P5 has the single set of even positions."""
        assert enumerate_maximum_independent_sets(path5).sets == (VertexSet((0, 2, 4)),)
        assert unique_maximum_independent_set(path5) == VertexSet((0, 2, 4))

    def test_empty_graph(self):
        """Test the order-zero graph has the empty set."""
        family = enumerate_maximum_independent_sets(graph_from_edges(0, []))
        assert family.alpha == 0
        assert family.sets == (VertexSet(()),)

    def test_matches_exhaustive_listing(self, random_graphs):
        """Test Omega equals the set of all independent alpha-subsets."""
        for g in random_graphs:
            if g.n > 10:
                continue
            family = enumerate_maximum_independent_sets(g)
            expected = {
                VertexSet(c) for c in combinations(range(g.n), family.alpha) if is_independent(g, VertexSet(c))
            }
            assert set(family.sets) == expected
            assert len(family.sets) == len(expected)

    def test_budget(self, cycle5):
        """Test exceeding the retained-set budget."""
        with pytest.raises(EnumerationBudgetExceeded):
            enumerate_maximum_independent_sets(cycle5, budget=4)
        assert len(enumerate_maximum_independent_sets(cycle5, budget=5)) == 5

    def test_tree_t2(self):
        """Test the catalog tree with five maximum independent sets."""
        assert len(enumerate_maximum_independent_sets(fixed("tree6"))) == 5

    def test_deterministic_order(self, petersen):
        """Test repeated runs list sets in the same order."""
        assert enumerate_maximum_independent_sets(petersen) == enumerate_maximum_independent_sets(petersen)


class TestPredicates:
    """Test independence and cover predicates."""

    def test_independent(self, path5):
        """Test independence of vertex sets."""
        assert is_independent(path5, VertexSet((0, 2)))
        assert not is_independent(path5, VertexSet((0, 1)))
        assert is_independent(path5, VertexSet(()))

    def test_vertex_cover(self, path5):
        """Test cover checks."""
        assert is_vertex_cover(path5, VertexSet((1, 3)))
        assert not is_vertex_cover(path5, VertexSet((1,)))

    def test_independent_vertex_cover(self, path5, cycle5):
        """Test a bipartition side of a path covers and is independent."""
        assert is_independent_vertex_cover(path5, VertexSet((1, 3)))
        assert not any(is_independent_vertex_cover(cycle5, VertexSet(c)) for c in combinations(range(5), 2))


class TestSumi:
    """Test strong unique maximum independence."""

    def test_path5_is_sumi(self, path5):
        """Test P5: unique set {0,2,4} with independent complement."""
        assert is_sumi_graph(path5)
        assert sumi_tree_leaf_check(path5)

    def test_path4_is_not(self):
        """Test P4 has leaves at odd distance."""
        p4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert not is_sumi_graph(p4)
        assert not sumi_tree_leaf_check(p4)

    def test_leaf_check_needs_tree(self, cycle5):
        """Test the leaf criterion is only defined on trees."""
        with pytest.raises(NotATreeError):
            sumi_tree_leaf_check(cycle5)

    def test_criteria_agree_on_random_trees(self):
        """Test the leaf criterion against the direct decision on random trees."""
        rng = random.Random(3)
        for _ in range(60):
            n = rng.randint(2, 12)
            edges = [(v, rng.randrange(v)) for v in range(1, n)]
            tree = graph_from_edges(n, edges)
            assert sumi_tree_leaf_check(tree) == is_sumi_graph(tree)
