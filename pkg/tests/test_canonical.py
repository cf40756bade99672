"""Tests for canonical forms."""
import random

import networkx as nx
import pytest

from annihilator.domain.errors import UnsupportedError
from annihilator.infrastructure.graph6 import decode_graph6
from annihilator.services.canonical_service import (
    CANONICAL_MAX_ORDER,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_order,
)
from annihilator.services.graph_service import graph_from_edges, relabel


def shuffled(g, seed):
    permutation = list(range(g.n))
    random.Random(seed).shuffle(permutation)
    return relabel(g, permutation)


class TestCanonicalForm:
    """Test labelling invariance and separation."""

    def test_invariant_under_relabelling(self, petersen, path5, cycle5, k4):
        """Test shuffled copies share a form."""
        for g in (petersen, path5, cycle5, k4):
            form = canonical_form(g)
            for seed in range(5):
                assert canonical_form(shuffled(g, seed)) == form

    def test_random_graphs_invariant(self, random_graphs):
        """Test invariance on random graphs up to the supported order."""
        for index, g in enumerate(random_graphs):
            if g.n > CANONICAL_MAX_ORDER:
                continue
            assert canonical_form(shuffled(g, index)) == canonical_form(g)

    def test_distinguishes_non_isomorphic(self, path5, cycle5):
        """Test P5 and C5 differ, as do the two trees with degree sequence 1,1,1,2,2,3."""
        assert canonical_form(path5) != canonical_form(cycle5)
        spider = graph_from_edges(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])
        broom = graph_from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])
        assert canonical_form(spider) != canonical_form(broom)

    def test_agrees_with_networkx(self, random_graphs, to_networkx):
        """Test form equality matches networkx isomorphism on pairs of random graphs."""
        small = [g for g in random_graphs if 4 <= g.n <= 7]
        for first, second in zip(small, small[1:]):
            if first.n != second.n or first.m != second.m:
                continue
            same = nx.is_isomorphic(to_networkx(first), to_networkx(second))
            assert are_isomorphic(first, second) == same

    def test_form_is_graph6(self, cycle5):
        """Test the form decodes to a relabelled copy."""
        form = canonical_form(cycle5)
        assert decode_graph6(form) == canonical_graph(cycle5)
        assert are_isomorphic(decode_graph6(form), cycle5)

    def test_order_is_permutation(self, petersen):
        """Test canonical_order lists every vertex once."""
        assert sorted(canonical_order(petersen)) == list(range(10))

    def test_empty_and_single(self):
        """Test orders 0 and 1."""
        assert canonical_form(graph_from_edges(0, [])) == b"?"
        assert canonical_form(graph_from_edges(1, [])) == b"@"

    def test_names_dropped(self):
        """Test the canonical copy carries no labels."""
        named = graph_from_edges(2, [(0, 1)], vertex_names=["x", "y"])
        assert canonical_graph(named).vertex_names is None

    def test_order_bound(self):
        """Test orders above the bound are unsupported."""
        with pytest.raises(UnsupportedError):
            canonical_form(graph_from_edges(CANONICAL_MAX_ORDER + 1, []))
