"""Tests for graph construction and structural queries."""
import networkx as nx
import pytest

from annihilator.domain.errors import BadVertexError, DuplicateEdgeError, SelfLoopError
from annihilator.domain.models import VertexSet
from annihilator.services.graph_service import (
    add_isolated,
    complement,
    connected_components,
    degree_sequence,
    degree_sum,
    delete_vertices,
    disjoint_union,
    graph_from_edges,
    graph_from_named_edges,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_tree,
    relabel,
)


class TestConstruction:
    """Test building graphs from edge lists."""

    def test_from_edges(self, path5):
        """Test a path on five vertices."""
        assert path5.n == 5
        assert path5.m == 4
        assert degree_sequence(path5).values == (1, 1, 2, 2, 2)

    def test_self_loop(self):
        """Test loops are rejected."""
        with pytest.raises(SelfLoopError):
            graph_from_edges(3, [(1, 1)])

    def test_duplicate_edge(self):
        """Test an unordered pair may appear once."""
        with pytest.raises(DuplicateEdgeError):
            graph_from_edges(3, [(0, 1), (1, 0)])

    def test_bad_vertex(self):
        """Test indices must lie in 0..n-1."""
        with pytest.raises(BadVertexError):
            graph_from_edges(3, [(0, 3)])

    def test_named_edges(self):
        """Test labels map to indices in the given order."""
        g = graph_from_named_edges(["a", "b", "c"], [("a", "c")])
        assert g.edges() == [(0, 2)]
        assert g.vertex_names == ("a", "b", "c")

    def test_unknown_label(self):
        """Test an edge naming a missing vertex."""
        with pytest.raises(BadVertexError):
            graph_from_named_edges(["a"], [("a", "z")])


class TestDegrees:
    """Test degree helpers."""

    def test_star_degree_sequence(self):
        """Test K1,3 degrees."""
        star = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert degree_sequence(star).values == (1, 1, 1, 3)
        assert star.degrees() == [3, 1, 1, 1]
        assert degree_sum(star, [1, 2]) == 2

    def test_handshake(self, random_graphs):
        """Test the degree total is twice the edge count."""
        for g in random_graphs:
            assert degree_sequence(g).total == 2 * g.m


class TestBipartite:
    """Test two-colouring."""

    def test_even_cycle(self):
        """Test C6 splits into alternate vertices."""
        c6 = graph_from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
        sides = is_bipartite(c6)
        assert sides == (VertexSet((0, 2, 4)), VertexSet((1, 3, 5)))

    def test_odd_cycle(self, cycle5):
        """Test C5 has no 2-colouring."""
        assert is_bipartite(cycle5) is None

    def test_agrees_with_networkx(self, random_graphs, to_networkx):
        """Test against networkx on random graphs."""
        for g in random_graphs:
            assert (is_bipartite(g) is not None) == nx.is_bipartite(to_networkx(g))


class TestOperations:
    """Test union, complement, subgraphs and relabelling."""

    def test_disjoint_union(self, k4, path5):
        """Test orders and sizes add."""
        g = disjoint_union(k4, path5)
        assert (g.n, g.m) == (9, 10)
        assert g.has_edge(4, 5)
        assert not g.has_edge(3, 4)

    def test_union_keeps_names(self):
        """Test labels of both sides survive."""
        a = graph_from_named_edges(["x", "y"], [("x", "y")])
        b = graph_from_edges(1, [])
        assert disjoint_union(a, b).vertex_names == ("x", "y", "0")

    def test_add_isolated(self, path5):
        """Test isolated vertices are placed first."""
        g = add_isolated(path5, 2)
        assert g.n == 7
        assert g.degrees()[:2] == [0, 0]
        assert g.m == path5.m

    def test_complement(self, cycle5):
        """Test C5 is self-complementary in size and the double complement is the identity."""
        assert complement(cycle5).m == 5
        assert complement(complement(cycle5)) == cycle5

    def test_induced_subgraph(self, k4):
        """Test any three vertices of K4 induce K3."""
        sub = induced_subgraph(k4, [3, 1, 0])
        assert (sub.n, sub.m) == (3, 3)

    def test_delete_vertices(self, path5):
        """Test removing the middle of P5 leaves two K2."""
        rest = delete_vertices(path5, [2])
        assert rest.edges() == [(0, 1), (2, 3)]

    def test_induced_subgraph_range(self, k4):
        """Test an out-of-range vertex."""
        with pytest.raises(BadVertexError):
            induced_subgraph(k4, [4])

    def test_relabel(self):
        """Test vertex v moves to permutation[v] with its name."""
        g = graph_from_named_edges(["a", "b", "c"], [("a", "b")])
        moved = relabel(g, [2, 0, 1])
        assert moved.edges() == [(0, 2)]
        assert moved.vertex_names == ("b", "c", "a")

    def test_relabel_requires_permutation(self, k4):
        """Test a non-permutation is rejected."""
        with pytest.raises(BadVertexError):
            relabel(k4, [0, 0, 1, 2])


class TestConnectivity:
    """Test components, connectivity and trees."""

    def test_components(self, k4, path5):
        """Test components are ordered by smallest vertex."""
        g = disjoint_union(k4, path5)
        assert connected_components(g) == [VertexSet((0, 1, 2, 3)), VertexSet((4, 5, 6, 7, 8))]
        assert not is_connected(g)

    def test_empty_graph_connected(self):
        """Test the order-zero graph counts as connected."""
        assert is_connected(graph_from_edges(0, []))

    def test_trees(self, path5, cycle5):
        """Test paths are trees and cycles are not."""
        assert is_tree(path5)
        assert not is_tree(cycle5)
        assert is_tree(graph_from_edges(1, []))
        assert not is_tree(graph_from_edges(2, []))

    def test_agrees_with_networkx(self, random_graphs, to_networkx):
        """Test component counts against networkx."""
        for g in random_graphs:
            assert len(connected_components(g)) == nx.number_connected_components(to_networkx(g))
