"""
Annihilation numbers of sequences and graphs, and the annihilating /
maximal / maximum predicates on vertex sets and index sets.

Graph-level arithmetic is done in integers against m(G). Sequence-level
arithmetic accepts any real values (int, float, Fraction).
"""
import logging
from itertools import combinations
from typing import Iterable, List, Optional, Sequence

from annihilator.domain.errors import BadVertexError, UnsupportedError
from annihilator.domain.models import AnnihilationVerdict, Graph, ThresholdSequence, VertexSet
from annihilator.services.graph_service import degree_sequence

logger = logging.getLogger(__name__)

SUBSET_ENUMERATION_MAX_ORDER = 16
SEQUENCE_CHECK_MAX_LENGTH = 20


def annihilation_number_of_sequence(d: ThresholdSequence) -> int:
    """Largest k with d_1 + ... + d_k <= theta (0 when even d_1 exceeds it)."""
    total = 0
    best = 0
    for k, value in enumerate(d.values, start=1):
        total += value
        if total > d.theta:
            break
        best = k
    return best


def annihilation_number(g: Graph) -> int:
    """h(g): the annihilation number of the degree sequence against m(g)."""
    return annihilation_number_of_sequence(ThresholdSequence(degree_sequence(g).values, g.m))


def degree_sum(g: Graph, a: VertexSet) -> int:
    _check_range(g, a)
    return sum(g.degree(v) for v in a)


def _check_range(g: Graph, a: VertexSet) -> None:
    if not a.within(g.n):
        raise BadVertexError(f"Vertex set {a.members} is not within 0..{g.n - 1}")


def annihilation_verdict(g: Graph, a: VertexSet, h: Optional[int] = None) -> AnnihilationVerdict:
    """
    Classify a vertex set against m(g).

    Args:
        g: Graph
        a: Vertex set of g
        h: Precomputed annihilation number, recomputed when omitted

    Returns:
        AnnihilationVerdict; maximal means no outside vertex fits, maximum means |a| = h
    """
    deg = degree_sum(g, a)
    m = g.m
    annihilating = deg <= m
    maximal = annihilating and all(deg + g.degree(v) > m for v in range(g.n) if v not in a)
    if h is None:
        h = annihilation_number(g)
    maximum = annihilating and len(a) == h
    return AnnihilationVerdict(is_annihilating=annihilating, is_maximal=maximal, is_maximum=maximum, deg_sum=deg)


def enumerate_maximum_annihilating_sets(g: Graph) -> List[VertexSet]:
    """
    Every vertex set of size h(g) whose degree sum is at most m(g).

    Raises:
        UnsupportedError: if n exceeds the subset enumeration bound
    """
    if g.n > SUBSET_ENUMERATION_MAX_ORDER:
        raise UnsupportedError(
            f"Maximum annihilating set enumeration supports n <= {SUBSET_ENUMERATION_MAX_ORDER}, got {g.n}"
        )
    h = annihilation_number(g)
    degrees = g.degrees()
    m = g.m
    return [VertexSet(subset) for subset in combinations(range(g.n), h) if sum(degrees[v] for v in subset) <= m]


def enumerate_maximal_annihilating_sets(g: Graph) -> List[VertexSet]:
    """
    Every maximal annihilating set of g, by walking all vertex subsets.

    Raises:
        UnsupportedError: if n exceeds the subset enumeration bound
    """
    if g.n > SUBSET_ENUMERATION_MAX_ORDER:
        raise UnsupportedError(
            f"Maximal annihilating set enumeration supports n <= {SUBSET_ENUMERATION_MAX_ORDER}, got {g.n}"
        )
    degrees = g.degrees()
    m = g.m
    result = []
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            deg = sum(degrees[v] for v in subset)
            if deg > m:
                continue
            members = set(subset)
            if all(deg + degrees[v] > m for v in range(g.n) if v not in members):
                result.append(VertexSet(subset))
    return result


def sequence_verdict(d: ThresholdSequence, indices: Iterable[int], h: Optional[int] = None) -> AnnihilationVerdict:
    """
    Classify an index subsequence of d against its threshold.

    Args:
        d: Threshold sequence
        indices: Positions into d.values (0-based)
        h: Precomputed annihilation number of d

    Returns:
        AnnihilationVerdict for the subsequence
    """
    chosen = sorted(set(indices))
    if any(not 0 <= i < len(d) for i in chosen):
        raise BadVertexError(f"Indices {chosen} are not within 0..{len(d) - 1}")
    total = sum(d.values[i] for i in chosen)
    annihilating = total <= d.theta
    picked = set(chosen)
    maximal = annihilating and all(total + d.values[i] > d.theta for i in range(len(d)) if i not in picked)
    if h is None:
        h = annihilation_number_of_sequence(d)
    maximum = annihilating and len(chosen) == h
    return AnnihilationVerdict(is_annihilating=annihilating, is_maximal=maximal, is_maximum=maximum, deg_sum=total)


def verify_maximum_implies_maximal(d: ThresholdSequence) -> bool:
    """
    Check that every maximum annihilating index subset of d is also maximal.

    Raises:
        UnsupportedError: if the sequence is longer than the brute force bound
    """
    if len(d) > SEQUENCE_CHECK_MAX_LENGTH:
        raise UnsupportedError(f"Sequence check supports length <= {SEQUENCE_CHECK_MAX_LENGTH}, got {len(d)}")
    h = annihilation_number_of_sequence(d)
    for subset in combinations(range(len(d)), h):
        verdict = sequence_verdict(d, subset, h=h)
        if verdict.is_maximum and not verdict.is_maximal:
            logger.warning(f"Maximum but not maximal subsequence {subset} of {d.values} at theta={d.theta}")
            return False
    return True


def h_bruteforce(degrees: Sequence[int], m: int) -> int:
    """Largest k such that some k vertices have degree sum at most m; an oracle for h."""
    best = 0
    for size in range(len(degrees) + 1):
        if any(sum(c) <= m for c in combinations(degrees, size)):
            best = size
    return best
