"""
Canonical forms for isomorphism dedup.

Individualisation-refinement: the vertex set is refined to an equitable ordered
partition, the first non-singleton cell is split by individualising each of its
vertices in turn, and the search recurses until the partition is discrete. Every
discrete partition gives a vertex order; the canonical labelling is the order
whose upper-triangle code (graph6 bit order) is largest. Twins inside a target
cell are interchangeable, so only one vertex per twin class is individualised.
"""
from typing import Dict, List, Tuple

from annihilator.domain.errors import UnsupportedError
from annihilator.domain.models import Graph, iter_bits
from annihilator.infrastructure.graph6 import encode_graph6
from annihilator.services.graph_service import relabel

CANONICAL_MAX_ORDER = 10


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _refine(adjacency: Tuple[int, ...], cells: List[int]) -> List[int]:
    """Refine an ordered partition (list of cell bitmasks) until it is equitable."""
    cells = list(cells)
    stable = False
    while not stable:
        stable = True
        for splitter in cells:
            refined: List[int] = []
            for cell in cells:
                if cell & (cell - 1) == 0:
                    refined.append(cell)
                    continue
                groups: Dict[int, int] = {}
                for v in iter_bits(cell):
                    key = _popcount(adjacency[v] & splitter)
                    groups[key] = groups.get(key, 0) | (1 << v)
                refined.extend(groups[key] for key in sorted(groups))
            if len(refined) != len(cells):
                cells = refined
                stable = False
                break
    return cells


def _twin_representatives(adjacency: Tuple[int, ...], cell: int) -> List[int]:
    representatives: List[int] = []
    for v in iter_bits(cell):
        for r in representatives:
            if adjacency[v] & ~(1 << r) == adjacency[r] & ~(1 << v):
                break
        else:
            representatives.append(v)
    return representatives


def _code(adjacency: Tuple[int, ...], order: List[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        column = adjacency[order[j]]
        for i in range(j):
            code = (code << 1) | (column >> order[i] & 1)
    return code


def canonical_order(g: Graph) -> List[int]:
    """
    Vertex order of the canonical labelling: position i holds the original
    vertex that becomes vertex i.

    Raises:
        UnsupportedError: if n exceeds the supported bound
    """
    if g.n > CANONICAL_MAX_ORDER:
        raise UnsupportedError(f"Canonical forms support n <= {CANONICAL_MAX_ORDER}, got {g.n}")
    if g.n == 0:
        return []
    adjacency = g.adjacency
    best_code = -1
    best_order: List[int] = []

    def search(cells: List[int]) -> None:
        nonlocal best_code, best_order
        cells = _refine(adjacency, cells)
        for index, cell in enumerate(cells):
            if cell & (cell - 1):
                break
        else:
            order = [cell.bit_length() - 1 for cell in cells]
            code = _code(adjacency, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        for v in _twin_representatives(adjacency, cell):
            single = 1 << v
            search(cells[:index] + [single, cell & ~single] + cells[index + 1:])

    search([g.full_mask])
    return best_order


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabelled copy of g (display names dropped)."""
    order = canonical_order(g)
    permutation = [0] * g.n
    for position, v in enumerate(order):
        permutation[v] = position
    plain = Graph(n=g.n, adjacency=g.adjacency)
    return relabel(plain, permutation)


def canonical_form(g: Graph) -> bytes:
    """
    Canonical byte string: equal for two graphs iff they are isomorphic.

    Returns:
        graph6 bytes of the canonically relabelled graph
    """
    return encode_graph6(canonical_graph(g)).encode("ascii")


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    return canonical_form(g1) == canonical_form(g2)
