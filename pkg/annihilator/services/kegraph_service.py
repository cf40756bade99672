"""
König-Egerváry test, the two conjecture clauses, and per-graph reports.

A graph is in scope when h >= n/2, compared exactly as 2h >= n. Out-of-scope
graphs still get every invariant, but their classification is always
out_of_scope.

The forward implication and the maximum-set equivalence are only claimed for
graphs without isolated vertices. Padding K3 with one isolated vertex gives
alpha = h = 2 >= n/2 with mu = 1, so the graph is not KE. Such graphs are
still classified by the definitions, and the report marks them.
"""
import logging
from typing import List, Optional

from annihilator.config import get_settings
from annihilator.domain.models import Classification, Graph, MaximumIndependentFamily
from annihilator.infrastructure.graph6 import MAX_ORDER, encode_graph6
from annihilator.schemas.reports import AnalysisReport, MisAnnotation
from annihilator.services.annihilation_service import annihilation_number, annihilation_verdict
from annihilator.services.graph_service import degree_sequence, is_bipartite
from annihilator.services.independence_service import (
    DEFAULT_ENUMERATION_BUDGET,
    enumerate_maximum_independent_sets,
    independence_number,
)
from annihilator.services.matching_service import matching_number

logger = logging.getLogger(__name__)


def is_koenig_egervary(g: Graph) -> bool:
    return independence_number(g) + matching_number(g) == g.n


def in_conjecture_scope(g: Graph) -> bool:
    return 2 * annihilation_number(g) >= g.n


def condition_i(g: Graph) -> bool:
    return independence_number(g) == annihilation_number(g)


def _annotate(g: Graph, family: MaximumIndependentFamily, h: int) -> List[MisAnnotation]:
    annotations = []
    for s in family.sets:
        verdict = annihilation_verdict(g, s, h=h)
        annotations.append(
            MisAnnotation(
                set=list(s.members),
                labels=s.labels(g) if g.vertex_names is not None else None,
                deg_sum=int(verdict.deg_sum),
                annihilating=verdict.is_annihilating,
                maximal=verdict.is_maximal,
                maximum=verdict.is_maximum,
                maximal_non_maximum=verdict.is_maximal and not verdict.is_maximum,
            )
        )
    return annotations


def condition_ii(g: Graph, budget: int = DEFAULT_ENUMERATION_BUDGET) -> bool:
    """
    KE and every maximum independent set is a maximal annihilating set.

    Raises:
        EnumerationBudgetExceeded: if Omega(g) is larger than budget
    """
    if not is_koenig_egervary(g):
        return False
    h = annihilation_number(g)
    family = enumerate_maximum_independent_sets(g, budget=budget)
    return all(annihilation_verdict(g, s, h=h).is_maximal for s in family.sets)


def every_mis_maximum(g: Graph, budget: int = DEFAULT_ENUMERATION_BUDGET) -> bool:
    h = annihilation_number(g)
    family = enumerate_maximum_independent_sets(g, budget=budget)
    return all(annihilation_verdict(g, s, h=h).is_maximum for s in family.sets)


def some_mis_maximum(g: Graph, budget: int = DEFAULT_ENUMERATION_BUDGET) -> bool:
    h = annihilation_number(g)
    family = enumerate_maximum_independent_sets(g, budget=budget)
    return any(annihilation_verdict(g, s, h=h).is_maximum for s in family.sets)


def sandwich_holds(n: int, alpha: int, mu: int) -> bool:
    if n == 0:
        return True
    return n // 2 + 1 <= alpha + mu <= n <= alpha + 2 * mu


def classify(g: Graph, budget: Optional[int] = None) -> AnalysisReport:
    """
    Compute every invariant and verdict of g.

    Args:
        g: Graph to analyze
        budget: Cap on retained maximum independent sets (settings default when omitted)

    Returns:
        Fully populated AnalysisReport

    Raises:
        EnumerationBudgetExceeded: if Omega(g) is larger than budget
    """
    if budget is None:
        budget = get_settings().ENUMERATION_BUDGET
    n, m = g.n, g.m
    h = annihilation_number(g)
    family = enumerate_maximum_independent_sets(g, budget=budget)
    alpha = family.alpha
    mu = matching_number(g)
    is_ke = alpha + mu == n
    in_scope = 2 * h >= n
    has_isolated = any(row == 0 for row in g.adjacency)
    annotations = _annotate(g, family, h)

    cond_i = alpha == h
    cond_ii = is_ke and all(a.maximal for a in annotations)
    every_maximum = all(a.maximum for a in annotations)
    some_maximum = any(a.maximum for a in annotations)
    equivalence = (not in_scope) or has_isolated or (cond_i == (is_ke and every_maximum) == (is_ke and some_maximum))
    classification = Classification.from_conditions(in_scope, cond_i, cond_ii)
    if classification == Classification.FORWARD_VIOLATION:
        if has_isolated:
            logger.debug(f"Forward violation on a graph with isolated vertices: n={n}, m={m}, alpha={alpha}, h={h}")
        else:
            logger.warning(f"Forward violation found: n={n}, m={m}, alpha={alpha}, h={h}")

    return AnalysisReport(
        graph6=encode_graph6(g) if n <= MAX_ORDER else None,
        n=n,
        m=m,
        degree_sequence=list(degree_sequence(g).values),
        alpha=alpha,
        mu=mu,
        h=h,
        is_bipartite=is_bipartite(g) is not None,
        is_ke=is_ke,
        in_conjecture_scope=in_scope,
        has_isolated_vertices=has_isolated,
        condition_i=cond_i,
        condition_ii=cond_ii,
        mis_annotations=annotations,
        classification=classification,
        every_mis_maximum=every_maximum,
        some_mis_maximum=some_maximum,
        maximum_equivalence_holds=equivalence,
        sandwich_holds=sandwich_holds(n, alpha, mu),
        h_lower_bound_holds=h >= max(n // 2, alpha),
    )
