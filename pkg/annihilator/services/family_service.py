"""
Labelled generators for the spider trees, the bipartite and non-bipartite
König-Egerváry families, the fixed example catalog, and standard graphs.

Edge lists are frozen here; every generator is locked by degree-sequence and
closed-form tests.
"""
import logging
import re
from typing import Callable, Dict, List, Optional, Tuple, Union

from annihilator.domain.errors import BadParameterError, FamilyNotFoundError
from annihilator.domain.models import ClosedForm, FamilyKind, FamilySpec, Graph
from annihilator.services.graph_service import (
    complement,
    graph_from_edges,
    graph_from_named_edges,
)

logger = logging.getLogger(__name__)

Edge = Tuple[str, str]

# Smallest k for which the family member has alpha < h with condition (ii)
COUNTEREXAMPLE_MIN_K: Dict[FamilyKind, int] = {
    FamilyKind.SPIDER_ODD: 4,
    FamilyKind.SPIDER_EVEN: 3,
    FamilyKind.BIPARTITE_EVEN: 0,
    FamilyKind.BIPARTITE_ODD: 0,
    FamilyKind.KE_EVEN: 0,
    FamilyKind.KE_ODD: 0,
}


def _labels(prefix: str, k: int) -> List[str]:
    return [f"{prefix}{i}" for i in range(1, k + 1)]


def _require_k(k: int, minimum: int, family: str) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < minimum:
        raise BadParameterError(f"{family} needs an integer k >= {minimum}, got {k!r}")


def spider_odd(k: int) -> Graph:
    """Tree of order 2k+1: centre v with legs v-b_i-a_i."""
    _require_k(k, 1, "spider_odd")
    names = ["v"] + _labels("b", k) + _labels("a", k)
    edges: List[Edge] = []
    for i in range(1, k + 1):
        edges += [("v", f"b{i}"), (f"b{i}", f"a{i}")]
    return graph_from_named_edges(names, edges)


def spider_even(k: int) -> Graph:
    """Tree of order 2k+4: v1, v2 hang off v4, v4-v3, legs v3-b_i-a_i."""
    _require_k(k, 1, "spider_even")
    names = ["v1", "v2", "v3", "v4"] + _labels("b", k) + _labels("a", k)
    edges: List[Edge] = [("v1", "v4"), ("v2", "v4"), ("v4", "v3")]
    for i in range(1, k + 1):
        edges += [("v3", f"b{i}"), (f"b{i}", f"a{i}")]
    return graph_from_named_edges(names, edges)


def _chain(k: int, anchor: str) -> List[Edge]:
    """x_i-y_i, x_i-y_{i+1} and y_1 tied to the core."""
    edges: List[Edge] = []
    for i in range(1, k + 1):
        edges.append((f"x{i}", f"y{i}"))
        if i < k:
            edges.append((f"x{i}", f"y{i + 1}"))
    if k >= 1:
        edges.append(("y1", anchor))
    return edges


BIPARTITE_EVEN_CORE: List[Edge] = [
    ("a1", "b4"), ("a1", "b3"), ("a1", "b1"),
    ("a2", "b4"), ("a2", "b3"),
    ("a3", "b4"), ("a3", "b3"), ("a3", "b2"),
    ("a4", "b4"), ("a4", "b3"), ("a4", "b2"), ("a4", "b1"),
]

BIPARTITE_ODD_CORE: List[Edge] = (
    [("b4", f"a{j}") for j in range(1, 6)]
    + [("b3", f"a{j}") for j in range(1, 6)]
    + [("b2", "a4"), ("b2", "a5"), ("b1", "a2"), ("b1", "a5")]
)

KE_EVEN_CORE: List[Edge] = (
    [("b4", f"a{j}") for j in range(1, 5)]
    + [("b3", f"a{j}") for j in range(1, 5)]
    + [("b2", "a3"), ("b2", "a4"), ("b1", "a1"), ("b1", "a4"), ("b3", "b4")]
)

KE_ODD_CORE: List[Edge] = BIPARTITE_ODD_CORE + [("b3", "b4")]


def bipartite_even(k: int) -> Graph:
    """Connected bipartite graph of order 2k+8 with alpha = n/2 < h."""
    _require_k(k, 0, "bipartite_even")
    names = _labels("a", 4) + _labels("b", 4) + _labels("x", k) + _labels("y", k)
    return graph_from_named_edges(names, BIPARTITE_EVEN_CORE + _chain(k, "a4"))


def bipartite_odd(k: int) -> Graph:
    """Connected bipartite graph of order 2k+9 with alpha = ceil(n/2) < h."""
    _require_k(k, 0, "bipartite_odd")
    names = _labels("a", 5) + _labels("b", 4) + _labels("x", k) + _labels("y", k)
    return graph_from_named_edges(names, BIPARTITE_ODD_CORE + _chain(k, "a5"))


def _ke_cross(k: int, a_count: int) -> List[Edge]:
    edges: List[Edge] = []
    for i in range(1, k + 1):
        edges += [(f"x{i}", f"y{j}") for j in range(1, k + 1)]
        edges += [(f"x{i}", f"b{j}") for j in range(1, 5)]
        edges += [(f"y{i}", f"a{j}") for j in range(1, a_count + 1)]
        if i < k:
            edges.append((f"y{i}", f"y{i + 1}"))
    if k >= 1:
        edges.append(("y1", "b4"))
    return edges


def ke_even(k: int) -> Graph:
    """Connected non-bipartite König-Egerváry graph of order 2k+8."""
    _require_k(k, 0, "ke_even")
    names = _labels("a", 4) + _labels("b", 4) + _labels("x", k) + _labels("y", k)
    return graph_from_named_edges(names, KE_EVEN_CORE + _ke_cross(k, 4))


def ke_odd(k: int) -> Graph:
    """Connected non-bipartite König-Egerváry graph of order 2k+9."""
    _require_k(k, 0, "ke_odd")
    names = _labels("a", 5) + _labels("b", 4) + _labels("x", k) + _labels("y", k)
    return graph_from_named_edges(names, KE_ODD_CORE + _ke_cross(k, 5))


# name -> (vertex labels, edges, caption)
FIXED_CATALOG: Dict[str, Tuple[List[str], List[Edge], str]] = {
    "fig3.G1": (
        ["p", "u", "w", "z", "q"],
        [("p", "u"), ("p", "w"), ("u", "w"), ("w", "z"), ("w", "q"), ("z", "q")],
        "two triangles sharing w; not KE, no MIS is maximal or maximum annihilating",
    ),
    "fig3.G2": (
        ["A", "B", "C", "D", "E"],
        [("A", "B"), ("B", "C"), ("A", "D"), ("A", "E"), ("D", "B"), ("D", "C"), ("B", "E"), ("C", "E")],
        "h = alpha = 2 < n/2; every MIS is maximal and maximum annihilating",
    ),
    "fig333.G1": (
        ["u0", "u1", "u2", "t0", "t1", "t2"],
        [("u0", "t1"), ("u0", "u1"), ("u1", "u2"), ("u0", "t0"), ("u1", "t1"), ("u1", "t2"), ("u2", "t2")],
        "KE, alpha = 3 < h = 4; no MIS is maximal annihilating",
    ),
    "fig333.G2": (
        ["u0", "b", "u2", "a", "t1", "t2"],
        [("u0", "b"), ("b", "u2"), ("u0", "a"), ("b", "t1"), ("b", "t2"), ("u2", "t2"), ("a", "t2"), ("a", "t1")],
        "KE, h = alpha = 3; {a, b} is a maximal non-maximum annihilating set",
    ),
    "fig333.G3": (
        ["p0", "p1", "p2", "p3", "t0", "t1", "t2"],
        [("p0", "p1"), ("p1", "p2"), ("p2", "p3"), ("t0", "p1"), ("p1", "t1"), ("t1", "t2"), ("t2", "p3")],
        "non-bipartite KE, h = alpha = 4 > n/2",
    ),
    "fig333.G4": (
        ["p0", "p1", "p2", "p3", "t0", "t1", "t2", "t3"],
        [
            ("p0", "p1"), ("p1", "p2"), ("p2", "p3"), ("t0", "p1"), ("p1", "t1"),
            ("p1", "t2"), ("t1", "t2"), ("t1", "p2"), ("p2", "t2"), ("p2", "t3"),
        ],
        "KE, alpha = 5 < h = 6; no MIS is maximal annihilating",
    ),
    "fig55.T1": (
        _labels("v", 8),
        [("v3", "v1"), ("v3", "v2"), ("v3", "v4"), ("v4", "v5"), ("v5", "v6"), ("v7", "v6"), ("v6", "v8")],
        "tree with h = alpha = 5",
    ),
    "fig55.T2": (
        ["a1", "a2", "a3", "b1", "b2", "b3"],
        [("b1", "a1"), ("b1", "a2"), ("b1", "a3"), ("b2", "a2"), ("b3", "a3")],
        "tree with five maximum independent sets, two of them maximal annihilating",
    ),
    "fig15.T3": (
        ["B5", "B6", "B7", "B8", "B9", "B10", "T5", "T6", "T7", "T8", "T9"],
        [
            ("B5", "B6"), ("B6", "B7"), ("B7", "B8"), ("B9", "B10"), ("T5", "B6"),
            ("T6", "B7"), ("B7", "T7"), ("B8", "T8"), ("B9", "T9"), ("B8", "T9"),
        ],
        "tree with alpha = 7 < h = 8; its unique MIS is annihilating but not maximal",
    ),
    "fig88.K3+e": (
        ["0", "1", "2", "3"],
        [("0", "1"), ("0", "2"), ("1", "2"), ("2", "3")],
        "triangle with a pendant edge",
    ),
    "fig88.K4-e": (
        ["0", "1", "2", "3"],
        [("0", "1"), ("0", "2"), ("1", "2"), ("1", "3"), ("2", "3")],
        "K4 minus the edge 0-3",
    ),
    "cycle8": (
        _labels("a", 4) + _labels("b", 4),
        [
            ("a1", "b1"), ("b1", "a4"), ("a4", "b2"), ("b2", "a3"),
            ("a3", "b3"), ("b3", "a2"), ("a2", "b4"), ("b4", "a1"),
        ],
        "spanning 8-cycle of bipartite_even(0); Omega = {A0, B0}",
    ),
    "cycle8-chord": (
        _labels("a", 4) + _labels("b", 4),
        [
            ("a1", "b1"), ("b1", "a4"), ("a4", "b2"), ("b2", "a3"),
            ("a3", "b3"), ("b3", "a2"), ("a2", "b4"), ("b4", "a1"), ("b3", "b4"),
        ],
        "the same 8-cycle plus the chord b3-b4; Omega = {A0}",
    ),
}


# descriptive name -> catalog id
FIXED_ALIASES: Dict[str, str] = {
    "butterfly": "fig3.G1",
    "dense5": "fig3.G2",
    "ke6-nomis": "fig333.G1",
    "ke6-pair": "fig333.G2",
    "ke7-nonbip": "fig333.G3",
    "ke8-nomis": "fig333.G4",
    "tree8": "fig55.T1",
    "tree6": "fig55.T2",
    "tree11": "fig15.T3",
    "paw": "fig88.K3+e",
    "diamond": "fig88.K4-e",
}


def _intro_graphs() -> Dict[str, Callable[[], Graph]]:
    return {
        "P5-bar": lambda: complement(standard("P", 5)),
        "C6-bar": lambda: complement(standard("C", 6)),
        "K2,3": lambda: standard("K", 2, 3),
    }


def fixed_names() -> List[str]:
    return sorted(list(FIXED_CATALOG) + list(_intro_graphs()) + list(FIXED_ALIASES))


def fixed(name: str) -> Graph:
    """
    Graph from the example catalog.

    Raises:
        FamilyNotFoundError: if name is not in the catalog
    """
    name = FIXED_ALIASES.get(name, name)
    if name in FIXED_CATALOG:
        names, edges, _ = FIXED_CATALOG[name]
        return graph_from_named_edges(names, edges)
    builders = _intro_graphs()
    if name in builders:
        return builders[name]()
    raise FamilyNotFoundError(f"Unknown fixed graph {name!r}; known: {', '.join(fixed_names())}")


def standard(kind: str, *params: int) -> Graph:
    """
    Standard graphs: ("K", n), ("K", p, q), ("P", n), ("C", n).

    Raises:
        BadParameterError: for unknown kinds or out-of-range sizes
    """
    if kind == "K" and len(params) == 2:
        p, q = params
        if p < 0 or q < 0 or p + q < 1:
            raise BadParameterError(f"K_{{p,q}} needs p, q >= 0 and p + q >= 1, got {p}, {q}")
        return graph_from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])
    if len(params) != 1:
        raise BadParameterError(f"Standard graph {kind!r} takes one size parameter, got {params}")
    n = params[0]
    if n < 1:
        raise BadParameterError(f"Standard graph {kind}{n} needs n >= 1")
    if kind == "K":
        return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if kind == "P":
        return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "C":
        if n < 3:
            raise BadParameterError(f"Cycle needs n >= 3, got {n}")
        return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    raise BadParameterError(f"Unknown standard graph kind {kind!r}")


_STANDARD_PATTERN = re.compile(r"^(K|P|C)(\d+)(?:,(\d+))?$")


def parse_standard(text: str) -> Tuple[str, Tuple[int, ...]]:
    """Parse "K5", "P4", "C7" or "K1,5" into (kind, params)."""
    match = _STANDARD_PATTERN.match(text)
    if not match:
        raise BadParameterError(f"Cannot parse standard graph {text!r}; use K<n>, K<p>,<q>, P<n> or C<n>")
    kind, first, second = match.groups()
    if second is not None and kind != "K":
        raise BadParameterError(f"Only K takes two parameters: {text!r}")
    params = (int(first),) if second is None else (int(first), int(second))
    return kind, params


def expected_closed_form(kind: FamilyKind, k: int) -> Optional[ClosedForm]:
    """Closed-form n, m, alpha, h, mu of a parametrised family member."""
    if kind == FamilyKind.SPIDER_ODD:
        return ClosedForm(n=2 * k + 1, m=2 * k, alpha=k + 1, h=2 if k == 1 else k + k // 2, mu=k)
    if kind == FamilyKind.SPIDER_EVEN:
        return ClosedForm(n=2 * k + 4, m=2 * k + 3, alpha=k + 3, h=k + 2 + (k + 1) // 2, mu=k + 1)
    if kind == FamilyKind.BIPARTITE_EVEN:
        return ClosedForm(n=2 * k + 8, m=2 * k + 12, alpha=k + 4, h={0: 5, 1: 6}.get(k, k + 6), mu=k + 4)
    if kind == FamilyKind.BIPARTITE_ODD:
        return ClosedForm(n=2 * k + 9, m=2 * k + 14, alpha=k + 5, h={0: 6, 1: 7}.get(k, k + 7), mu=k + 4)
    if kind == FamilyKind.KE_EVEN:
        return ClosedForm(n=2 * k + 8, m=k * k + 9 * k + 13, alpha=k + 4, h=k + 5, mu=k + 4)
    if kind == FamilyKind.KE_ODD:
        return ClosedForm(n=2 * k + 9, m=k * k + 10 * k + 15, alpha=k + 5, h=k + 6, mu=k + 4)
    return None


_GENERATORS: Dict[FamilyKind, Callable[[int], Graph]] = {
    FamilyKind.SPIDER_ODD: spider_odd,
    FamilyKind.SPIDER_EVEN: spider_even,
    FamilyKind.BIPARTITE_EVEN: bipartite_even,
    FamilyKind.BIPARTITE_ODD: bipartite_odd,
    FamilyKind.KE_EVEN: ke_even,
    FamilyKind.KE_ODD: ke_odd,
}


class FamilyService:
    """
    Resolves family requests (as typed on the command line) to graphs.
    """

    def resolve(self, name: str, k: Optional[int] = None) -> FamilySpec:
        """
        Turn a family name and parameter into a FamilySpec.

        Args:
            name: spider-odd, spider-even, bip-even, bip-odd, ke-even, ke-odd, fixed:<id> or std:<kind>
            k: Family parameter (parametrised families only)

        Raises:
            FamilyNotFoundError: for unknown names
            BadParameterError: for a missing or invalid k
        """
        if name.startswith("fixed:"):
            ident = name[len("fixed:"):]
            if ident not in fixed_names():
                raise FamilyNotFoundError(f"Unknown fixed graph {ident!r}; known: {', '.join(fixed_names())}")
            return FamilySpec(family=FamilyKind.FIXED, k=ident)
        if name.startswith("std:"):
            ident = name[len("std:"):]
            parse_standard(ident)
            return FamilySpec(family=FamilyKind.STANDARD, k=ident)
        try:
            kind = FamilyKind.from_cli_name(name)
        except ValueError:
            raise FamilyNotFoundError(f"Unknown family {name!r}") from None
        if kind in (FamilyKind.FIXED, FamilyKind.STANDARD):
            raise FamilyNotFoundError(f"Use {name}:<name> for catalog graphs")
        if k is None:
            raise BadParameterError(f"Family {name} needs --k")
        return FamilySpec(family=kind, k=k, expected=expected_closed_form(kind, k))

    def build(self, member: FamilySpec) -> Graph:
        """Generate the graph a FamilySpec describes."""
        if member.family == FamilyKind.FIXED:
            return fixed(str(member.k))
        if member.family == FamilyKind.STANDARD:
            kind, params = parse_standard(str(member.k))
            return standard(kind, *params)
        assert isinstance(member.k, int)
        logger.debug(f"Building {member.label}")
        return _GENERATORS[member.family](member.k)

    def generate(self, name: str, k: Optional[int] = None) -> Graph:
        return self.build(self.resolve(name, k))

    def in_counterexample_range(self, member: FamilySpec) -> bool:
        """True when this member is a converse counterexample by construction."""
        minimum = COUNTEREXAMPLE_MIN_K.get(member.family)
        return minimum is not None and isinstance(member.k, int) and member.k >= minimum


_family_service_instance: Optional[FamilyService] = None


def get_family_service() -> FamilyService:
    """Get or create the family service singleton."""
    global _family_service_instance
    if _family_service_instance is None:
        _family_service_instance = FamilyService()
    return _family_service_instance


def family_member(kind: FamilyKind, k: Union[int, str]) -> Graph:
    return get_family_service().build(FamilySpec(family=kind, k=k))
