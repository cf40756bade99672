"""
Maximum matching on general graphs.

Edmonds' blossom algorithm in its array form: a breadth-first alternating
forest is grown from each exposed vertex, odd cycles are contracted by
relabelling their vertices to a common base, and an augmenting path is
applied as soon as one is found. Bipartite graphs may take the
Hopcroft-Karp layered search instead.
"""
import logging
from collections import deque
from functools import lru_cache
from typing import List, Optional, Sequence

from annihilator.domain.errors import UnsupportedError
from annihilator.domain.models import Graph, Matching, VertexSet, iter_bits
from annihilator.services.graph_service import is_bipartite

logger = logging.getLogger(__name__)

BRUTEFORCE_MAX_ORDER = 14


def _greedy_seed(g: Graph) -> List[int]:
    mate = [-1] * g.n
    for u, v in g.edges():
        if mate[u] == -1 and mate[v] == -1:
            mate[u] = v
            mate[v] = u
    return mate


class _Blossom:
    """State for one run of the blossom search; confined to a single call."""

    def __init__(self, g: Graph, mate: List[int]):
        self.g = g
        self.mate = mate
        self.n = g.n
        self.parent: List[int] = []
        self.base: List[int] = []
        self.used: List[bool] = []
        self.in_blossom: List[bool] = []

    def _lowest_common_base(self, a: int, b: int) -> int:
        seen = [False] * self.n
        while True:
            a = self.base[a]
            seen[a] = True
            if self.mate[a] == -1:
                break
            a = self.parent[self.mate[a]]
        while True:
            b = self.base[b]
            if seen[b]:
                return b
            b = self.parent[self.mate[b]]

    def _mark_path(self, v: int, b: int, child: int) -> None:
        while self.base[v] != b:
            self.in_blossom[self.base[v]] = True
            self.in_blossom[self.base[self.mate[v]]] = True
            self.parent[v] = child
            child = self.mate[v]
            v = self.parent[self.mate[v]]

    def find_path(self, root: int) -> int:
        """Search an augmenting path from root; return its far end or -1."""
        self.used = [False] * self.n
        self.parent = [-1] * self.n
        self.base = list(range(self.n))
        self.used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in iter_bits(self.g.adjacency[v]):
                if self.base[v] == self.base[to] or self.mate[v] == to:
                    continue
                if to == root or (self.mate[to] != -1 and self.parent[self.mate[to]] != -1):
                    current = self._lowest_common_base(v, to)
                    self.in_blossom = [False] * self.n
                    self._mark_path(v, current, to)
                    self._mark_path(to, current, v)
                    for i in range(self.n):
                        if self.in_blossom[self.base[i]]:
                            self.base[i] = current
                            if not self.used[i]:
                                self.used[i] = True
                                queue.append(i)
                elif self.parent[to] == -1:
                    self.parent[to] = v
                    if self.mate[to] == -1:
                        return to
                    self.used[self.mate[to]] = True
                    queue.append(self.mate[to])
        return -1

    def augment(self, end: int) -> None:
        v = end
        while v != -1:
            previous = self.parent[v]
            next_v = self.mate[previous]
            self.mate[v] = previous
            self.mate[previous] = v
            v = next_v


def _blossom_matching(g: Graph) -> List[int]:
    mate = _greedy_seed(g)
    search = _Blossom(g, mate)
    for root in range(g.n):
        if mate[root] == -1:
            end = search.find_path(root)
            if end != -1:
                search.augment(end)
    return mate


def _hopcroft_karp(g: Graph, left: Sequence[int]) -> List[int]:
    """Layered augmenting search from the left side of a bipartition."""
    mate = _greedy_seed(g)
    infinity = g.n + 1
    dist = {}

    def layer() -> bool:
        queue = deque()
        found = False
        for u in left:
            if mate[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = infinity
        while queue:
            u = queue.popleft()
            for v in iter_bits(g.adjacency[u]):
                w = mate[v]
                if w == -1:
                    found = True
                elif dist[w] == infinity:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def extend(u: int) -> bool:
        for v in iter_bits(g.adjacency[u]):
            w = mate[v]
            if w == -1 or (dist[w] == dist[u] + 1 and extend(w)):
                mate[u] = v
                mate[v] = u
                return True
        dist[u] = infinity
        return False

    while layer():
        for u in left:
            if mate[u] == -1:
                extend(u)
    return mate


def _to_matching(mate: List[int]) -> Matching:
    return Matching(tuple((v, u) for v, u in enumerate(mate) if u > v))


def maximum_matching(g: Graph, use_bipartite_path: bool = True) -> Matching:
    """
    Compute a maximum matching of g.

    Args:
        g: Graph to match
        use_bipartite_path: Use Hopcroft-Karp when g is bipartite

    Returns:
        Matching of cardinality mu(g); the same input always gives the same matching
    """
    if use_bipartite_path:
        sides = is_bipartite(g)
        if sides is not None:
            return _to_matching(_hopcroft_karp(g, sides[0].members))
    return _to_matching(_blossom_matching(g))


def matching_number(g: Graph) -> int:
    return maximum_matching(g).size


def has_perfect_matching(g: Graph) -> bool:
    return 2 * matching_number(g) == g.n


def is_vertex_disjoint(edges: Sequence[tuple]) -> bool:
    seen = set()
    for u, v in edges:
        if u in seen or v in seen or u == v:
            return False
        seen.update((u, v))
    return True


def mu_bruteforce(g: Graph) -> int:
    """
    Exact matching number by exhaustive search, memoised on the set of
    still-available vertices.

    Raises:
        UnsupportedError: if n exceeds the oracle's bound
    """
    if g.n > BRUTEFORCE_MAX_ORDER:
        raise UnsupportedError(f"mu_bruteforce supports n <= {BRUTEFORCE_MAX_ORDER}, got {g.n}")
    adjacency = g.adjacency

    @lru_cache(maxsize=None)
    def best(available: int) -> int:
        if not available:
            return 0
        low = available & -available
        v = low.bit_length() - 1
        rest = available ^ low
        ceiling = bin(available).count("1") // 2
        result = best(rest)
        for u in iter_bits(adjacency[v] & rest):
            if result == ceiling:
                break
            result = max(result, 1 + best(rest & ~(1 << u)))
        return result

    return best(g.full_mask)


def cover_from_matching(g: Graph, matching: Optional[Matching] = None) -> VertexSet:
    """Both endpoints of every matching edge (a vertex cover when the matching is maximal)."""
    matching = matching if matching is not None else maximum_matching(g)
    return VertexSet.of(v for edge in matching.edges for v in edge)
