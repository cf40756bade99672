"""
Exact independence number and enumeration of all maximum independent sets.

One branch-and-bound tree serves both: branch on the vertex of largest degree
in the remaining candidate set (ties to the smallest index), either taking it
and dropping its closed neighbourhood or discarding it. A greedy clique cover
of the candidates bounds what a subtree can still add; a greedy independent
set seeds the incumbent.
"""
import logging
from typing import List, Optional

from annihilator.domain.errors import EnumerationBudgetExceeded, NotATreeError
from annihilator.domain.models import Graph, MaximumIndependentFamily, VertexSet, iter_bits
from annihilator.services.graph_service import is_bipartite, is_tree

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_BUDGET = 1_000_000


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _clique_cover_bound(adjacency, candidates: int) -> int:
    """Number of cliques in a greedy clique cover of the candidate set."""
    cliques: List[int] = []
    for v in iter_bits(candidates):
        row = adjacency[v]
        for i, clique in enumerate(cliques):
            if clique & row == clique:
                cliques[i] = clique | (1 << v)
                break
        else:
            cliques.append(1 << v)
    return len(cliques)


def _greedy_independent_size(adjacency, candidates: int) -> int:
    size = 0
    while candidates:
        v = min(iter_bits(candidates), key=lambda u: (_popcount(adjacency[u] & candidates), u))
        candidates &= ~(adjacency[v] | (1 << v))
        size += 1
    return size


def _branch_vertex(adjacency, candidates: int) -> int:
    best_v, best_degree = -1, -1
    for v in iter_bits(candidates):
        degree = _popcount(adjacency[v] & candidates)
        if degree > best_degree:
            best_v, best_degree = v, degree
    return best_v


class _Search:
    """Branch-and-bound state for a single call."""

    def __init__(self, g: Graph, enumerate_all: bool, budget: int):
        self.adjacency = g.adjacency
        self.enumerate_all = enumerate_all
        self.budget = budget
        self.best = _greedy_independent_size(g.adjacency, g.full_mask)
        self.found: List[int] = []
        self.found_size = -1

    def _record(self, chosen: int, size: int) -> None:
        if size > self.found_size:
            self.found_size = size
            self.found = [chosen]
            self.best = size
        elif size == self.found_size and self.enumerate_all:
            self.found.append(chosen)
            if len(self.found) > self.budget:
                raise EnumerationBudgetExceeded(self.budget)

    def run(self, candidates: int, chosen: int, size: int) -> None:
        if not candidates:
            if size >= self.best:
                self._record(chosen, size)
            return
        bound = size + _clique_cover_bound(self.adjacency, candidates)
        if bound < self.best or (bound == self.best and not self.enumerate_all and self.found_size == self.best):
            return
        v = _branch_vertex(self.adjacency, candidates)
        if not self.adjacency[v] & candidates:
            # every candidate is isolated in what remains
            self.run(0, chosen | candidates, size + _popcount(candidates))
            return
        bit = 1 << v
        self.run(candidates & ~(self.adjacency[v] | bit), chosen | bit, size + 1)
        self.run(candidates & ~bit, chosen, size)


def independence_number(g: Graph) -> int:
    """Exact alpha(g)."""
    if g.n == 0:
        return 0
    search = _Search(g, enumerate_all=False, budget=1)
    search.run(g.full_mask, 0, 0)
    return search.found_size


def enumerate_maximum_independent_sets(
    g: Graph,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> MaximumIndependentFamily:
    """
    Enumerate Omega(g), every maximum independent set of g.

    Args:
        g: Graph to search
        budget: Maximum number of sets retained before giving up

    Returns:
        MaximumIndependentFamily with sets in search order

    Raises:
        EnumerationBudgetExceeded: if more than budget maximum sets exist
    """
    if g.n == 0:
        return MaximumIndependentFamily(alpha=0, sets=(VertexSet(()),))
    search = _Search(g, enumerate_all=True, budget=budget)
    search.run(g.full_mask, 0, 0)
    logger.debug(f"Found {len(search.found)} maximum independent sets of size {search.found_size}")
    return MaximumIndependentFamily(
        alpha=search.found_size,
        sets=tuple(VertexSet.from_mask(mask) for mask in search.found),
    )


def is_independent(g: Graph, s: VertexSet) -> bool:
    mask = s.mask
    return all(not g.adjacency[v] & mask for v in s)


def is_vertex_cover(g: Graph, s: VertexSet) -> bool:
    """True when every edge has an endpoint in s."""
    outside = g.full_mask & ~s.mask
    return all(not g.adjacency[v] & outside for v in iter_bits(outside))


def is_independent_vertex_cover(g: Graph, s: VertexSet) -> bool:
    return is_independent(g, s) and is_vertex_cover(g, s)


def is_sumi_graph(g: Graph, budget: int = DEFAULT_ENUMERATION_BUDGET) -> bool:
    """
    Strong unique maximum independence: a unique maximum independent set S
    whose complement V - S is independent as well.
    """
    family = enumerate_maximum_independent_sets(g, budget=budget)
    if len(family) != 1:
        return False
    rest = VertexSet.from_mask(g.full_mask & ~family.sets[0].mask)
    return is_independent(g, rest)


def sumi_tree_leaf_check(g: Graph) -> bool:
    """
    True when every two leaves of the tree g are an even distance apart.

    Raises:
        NotATreeError: if g is not a tree
    """
    if not is_tree(g):
        raise NotATreeError(f"Graph with n={g.n}, m={g.m} is not a tree")
    sides = is_bipartite(g)
    assert sides is not None
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    return all(v in sides[0] for v in leaves) or all(v in sides[1] for v in leaves)


def alpha_bruteforce(g: Graph) -> int:
    """Independence number by scanning every vertex subset; for small oracles."""
    best = 0
    for mask in range(1 << g.n):
        size = _popcount(mask)
        if size > best and all(not g.adjacency[v] & mask for v in iter_bits(mask)):
            best = size
    return best


def unique_maximum_independent_set(g: Graph) -> Optional[VertexSet]:
    family = enumerate_maximum_independent_sets(g)
    return family.sets[0] if len(family) == 1 else None
