"""
Graph construction and elementary structural queries.
All functions are pure; Graph values are never mutated.
"""
from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple

from annihilator.domain.errors import BadVertexError, DuplicateEdgeError, SelfLoopError
from annihilator.domain.models import DegreeSequence, Graph, VertexSet, iter_bits


def graph_from_edges(
    n: int,
    edges: Iterable[Tuple[int, int]],
    vertex_names: Optional[Sequence[str]] = None,
) -> Graph:
    """
    Build a simple graph from an edge list.

    Args:
        n: Vertex count; vertices are 0..n-1
        edges: Unordered vertex pairs
        vertex_names: Optional display labels, one per vertex

    Returns:
        Graph with exactly the given edges

    Raises:
        BadVertexError: if an index is outside 0..n-1
        SelfLoopError: if a pair repeats a vertex
        DuplicateEdgeError: if an unordered pair is listed twice
    """
    if n < 0:
        raise BadVertexError(f"Vertex count must be nonnegative, got {n}")
    adjacency = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise BadVertexError(f"Edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"Self-loop at vertex {u}")
        if adjacency[u] >> v & 1:
            raise DuplicateEdgeError(f"Edge ({u}, {v}) listed more than once")
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
    names = tuple(vertex_names) if vertex_names is not None else None
    return Graph(n=n, adjacency=tuple(adjacency), vertex_names=names)


def graph_from_named_edges(names: Sequence[str], edges: Iterable[Tuple[str, str]]) -> Graph:
    """Build a graph whose edges are given by vertex labels."""
    index = {name: i for i, name in enumerate(names)}
    try:
        pairs = [(index[a], index[b]) for a, b in edges]
    except KeyError as e:
        raise BadVertexError(f"Unknown vertex label {e.args[0]!r}") from None
    return graph_from_edges(len(names), pairs, vertex_names=names)


def degree_sequence(g: Graph) -> DegreeSequence:
    """Sorted nondecreasing degrees of g."""
    return DegreeSequence(tuple(sorted(g.degrees())))


def degree_sum(g: Graph, vertices: Iterable[int]) -> int:
    return sum(g.degree(v) for v in vertices)


def is_bipartite(g: Graph) -> Optional[Tuple[VertexSet, VertexSet]]:
    """
    Two-colour g by breadth-first search.

    Returns:
        (side0, side1) with side0 holding every component's smallest vertex,
        or None if g contains an odd cycle
    """
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.adjacency[v]):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    side0 = VertexSet.of(v for v in range(g.n) if colour[v] == 0)
    side1 = VertexSet.of(v for v in range(g.n) if colour[v] == 1)
    return side0, side1


def _merge_names(g1: Graph, g2: Graph) -> Optional[Tuple[str, ...]]:
    if g1.vertex_names is None and g2.vertex_names is None:
        return None
    return tuple(g1.name(v) for v in range(g1.n)) + tuple(g2.name(v) for v in range(g2.n))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1 followed by g2, with g2's vertices shifted by n(g1)."""
    shifted = tuple(row << g1.n for row in g2.adjacency)
    return Graph(n=g1.n + g2.n, adjacency=g1.adjacency + shifted, vertex_names=_merge_names(g1, g2))


def add_isolated(g: Graph, q: int) -> Graph:
    """q isolated vertices placed in front of g (q*K1 union g)."""
    if q < 0:
        raise BadVertexError(f"Cannot add {q} isolated vertices")
    return disjoint_union(Graph(n=q, adjacency=(0,) * q), g)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    rows = tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adjacency))
    return Graph(n=g.n, adjacency=rows, vertex_names=g.vertex_names)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by the given vertices, relabelled 0..k-1 in ascending order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise BadVertexError(f"Vertex {v} outside 0..{g.n - 1}")
    position = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adjacency[v]):
            if u in position:
                row |= 1 << position[u]
        rows.append(row)
    names = tuple(g.name(v) for v in keep) if g.vertex_names is not None else None
    return Graph(n=len(keep), adjacency=tuple(rows), vertex_names=names)


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """g minus the given vertices."""
    drop = set(vertices)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """
    Relabel g so that vertex v becomes permutation[v].
    Display names travel with their vertices.
    """
    if sorted(permutation) != list(range(g.n)):
        raise BadVertexError(f"Not a permutation of 0..{g.n - 1}: {list(permutation)}")
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in iter_bits(g.adjacency[v]):
            row |= 1 << permutation[u]
        rows[permutation[v]] = row
    names = None
    if g.vertex_names is not None:
        moved = [""] * g.n
        for v in range(g.n):
            moved[permutation[v]] = g.vertex_names[v]
        names = tuple(moved)
    return Graph(n=g.n, adjacency=tuple(rows), vertex_names=names)


def component_masks(g: Graph) -> List[int]:
    """Vertex bitmasks of the connected components, ordered by smallest vertex."""
    seen = 0
    masks = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        component = 1 << start
        frontier = component
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adjacency[v]
            frontier = reach & ~component
            component |= frontier
        seen |= component
        masks.append(component)
    return masks


def connected_components(g: Graph) -> List[VertexSet]:
    """Partition of V into connected blocks, ordered by smallest vertex."""
    return [VertexSet.from_mask(mask) for mask in component_masks(g)]


def is_connected(g: Graph) -> bool:
    """True for connected graphs; the empty graph counts as connected."""
    return len(component_masks(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)
