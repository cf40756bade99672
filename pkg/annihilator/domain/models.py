"""
Domain models for the annihilator package.
Immutable value objects for graphs, vertex sets, matchings, degree sequences
and the verdicts computed over them.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from numbers import Real
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from annihilator.domain.errors import InvalidGraphError

Number = Union[int, float, Fraction]


class Classification(str, Enum):
    """
    Conjecture bucket of an analyzed graph.
    Only graphs with h >= n/2 receive a verdict other than OUT_OF_SCOPE.
    """
    CONSISTENT = "consistent"
    FORWARD_VIOLATION = "forward_violation"
    CONVERSE_COUNTEREXAMPLE = "converse_counterexample"
    OUT_OF_SCOPE = "out_of_scope"

    @staticmethod
    def from_conditions(in_scope: bool, condition_i: bool, condition_ii: bool) -> "Classification":
        """Map the scope guard and the two conjecture clauses to a bucket."""
        if not in_scope:
            return Classification.OUT_OF_SCOPE
        if condition_i and not condition_ii:
            return Classification.FORWARD_VIOLATION
        if condition_ii and not condition_i:
            return Classification.CONVERSE_COUNTEREXAMPLE
        return Classification.CONSISTENT


class FamilyKind(str, Enum):
    """Graph families the generator layer can build."""
    SPIDER_ODD = "spider_odd"
    SPIDER_EVEN = "spider_even"
    BIPARTITE_EVEN = "bipartite_even"
    BIPARTITE_ODD = "bipartite_odd"
    KE_EVEN = "ke_even"
    KE_ODD = "ke_odd"
    FIXED = "fixed"
    STANDARD = "standard"

    @property
    def cli_name(self) -> str:
        """Name used on the command line (spider-odd, bip-even, ...)."""
        return _CLI_NAMES[self]

    @staticmethod
    def from_cli_name(name: str) -> "FamilyKind":
        for kind, cli in _CLI_NAMES.items():
            if cli == name:
                return kind
        raise ValueError(f"Unknown family name: {name}")


_CLI_NAMES: Dict[FamilyKind, str] = {
    FamilyKind.SPIDER_ODD: "spider-odd",
    FamilyKind.SPIDER_EVEN: "spider-even",
    FamilyKind.BIPARTITE_EVEN: "bip-even",
    FamilyKind.BIPARTITE_ODD: "bip-odd",
    FamilyKind.KE_EVEN: "ke-even",
    FamilyKind.KE_ODD: "ke-odd",
    FamilyKind.FIXED: "fixed",
    FamilyKind.STANDARD: "std",
}


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class Graph:
    """
    Finite simple undirected graph on vertices 0..n-1.

    adjacency[v] is a bitmask whose bit u is set iff u ~ v. vertex_names is an
    optional side table of display labels (e.g. "a1", "x3").
    """
    n: int
    adjacency: Tuple[int, ...]
    vertex_names: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        """Validate the adjacency relation is symmetric and irreflexive."""
        if self.n < 0:
            raise InvalidGraphError(f"Invalid vertex count: {self.n}")
        if len(self.adjacency) != self.n:
            raise InvalidGraphError(f"Adjacency has {len(self.adjacency)} rows, expected {self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adjacency):
            if row & ~full:
                raise InvalidGraphError(f"Vertex {v} has neighbours outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InvalidGraphError(f"Vertex {v} is adjacent to itself")
            rest = row
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.adjacency[u] >> v & 1:
                    raise InvalidGraphError(f"Adjacency is not symmetric at ({v}, {u})")
                rest ^= low
        if self.vertex_names is not None and len(self.vertex_names) != self.n:
            raise InvalidGraphError(f"Expected {self.n} vertex names, got {len(self.vertex_names)}")

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(_popcount(row) for row in self.adjacency) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return _popcount(self.adjacency[v])

    def degrees(self) -> List[int]:
        """Per-vertex degrees in vertex order."""
        return [_popcount(row) for row in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        """Neighbours of v in ascending order."""
        return list(iter_bits(self.adjacency[v]))

    def edges(self) -> List[Tuple[int, int]]:
        """All edges (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adjacency[u] >> (u + 1) << (u + 1))]

    def name(self, v: int) -> str:
        """Display label of v (its index when the graph is unnamed)."""
        if self.vertex_names is None:
            return str(v)
        return self.vertex_names[v]

    def index(self, name: str) -> int:
        """Vertex index carrying the given display label."""
        if self.vertex_names is None:
            return int(name)
        try:
            return self.vertex_names.index(name)
        except ValueError:
            raise KeyError(f"No vertex named {name!r}") from None

    def vertex_set(self, *names: str) -> "VertexSet":
        """Build a VertexSet from display labels."""
        return VertexSet.of(self.index(name) for name in names)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """Duplicate-free set of vertex indices, kept in ascending order."""
    members: Tuple[int, ...]

    def __post_init__(self):
        """Validate indices and normalise ordering."""
        if any(v < 0 for v in self.members):
            raise InvalidGraphError(f"Negative vertex index in {self.members}")
        if len(set(self.members)) != len(self.members):
            raise InvalidGraphError(f"Duplicate vertex in {self.members}")
        object.__setattr__(self, "members", tuple(sorted(self.members)))

    @classmethod
    def of(cls, vertices) -> "VertexSet":
        return cls(tuple(vertices))

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        return cls(tuple(iter_bits(mask)))

    @property
    def mask(self) -> int:
        result = 0
        for v in self.members:
            result |= 1 << v
        return result

    def within(self, n: int) -> bool:
        """True when every member is a vertex of a graph of order n."""
        return all(v < n for v in self.members)

    def labels(self, g: Graph) -> List[str]:
        return [g.name(v) for v in self.members]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members


@dataclass(frozen=True)
class DegreeSequence:
    """Nondecreasing list of nonnegative integers."""
    values: Tuple[int, ...]

    def __post_init__(self):
        """Validate ordering and sign."""
        if any(d < 0 for d in self.values):
            raise ValueError(f"Negative degree in {self.values}")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError(f"Degree sequence must be nondecreasing: {self.values}")

    @property
    def total(self) -> int:
        return sum(self.values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Matching:
    """Set of pairwise vertex-disjoint edges, stored as sorted (u, v) pairs with u < v."""
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        """Normalise and check vertex-disjointness."""
        normalised = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        seen = set()
        for u, v in normalised:
            if u == v:
                raise InvalidGraphError(f"Matching edge ({u}, {v}) is a loop")
            if u in seen or v in seen:
                raise InvalidGraphError(f"Matching edges share a vertex at ({u}, {v})")
            seen.update((u, v))
        object.__setattr__(self, "edges", normalised)

    @property
    def size(self) -> int:
        return len(self.edges)

    def is_valid_for(self, g: Graph) -> bool:
        """True when every pair is an edge of g."""
        return all(u < g.n and v < g.n and g.has_edge(u, v) for u, v in self.edges)

    def mate(self, v: int) -> Optional[int]:
        for a, b in self.edges:
            if a == v:
                return b
            if b == v:
                return a
        return None


@dataclass(frozen=True)
class ThresholdSequence:
    """
    Nondecreasing real sequence paired with a threshold.
    Subsequences are addressed by index sets into values.
    """
    values: Tuple[Number, ...]
    theta: Number

    def __post_init__(self):
        """Validate ordering."""
        for x in (*self.values, self.theta):
            if not isinstance(x, Real):
                raise ValueError(f"Non-real entry {x!r}")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError(f"Sequence must be nondecreasing: {self.values}")

    @classmethod
    def of(cls, values: Sequence[Number], theta: Number) -> "ThresholdSequence":
        return cls(tuple(values), theta)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class AnnihilationVerdict:
    """Annihilating / maximal / maximum flags for one vertex set (or index set)."""
    is_annihilating: bool
    is_maximal: bool
    is_maximum: bool
    deg_sum: Number

    def __post_init__(self):
        """Maximal and maximum both require annihilating."""
        if (self.is_maximal or self.is_maximum) and not self.is_annihilating:
            raise ValueError("A maximal or maximum set must be annihilating")


@dataclass(frozen=True)
class MaximumIndependentFamily:
    """The independence number together with every maximum independent set."""
    alpha: int
    sets: Tuple[VertexSet, ...]

    def __post_init__(self):
        """Every listed set has size alpha and the list is duplicate-free."""
        if any(len(s) != self.alpha for s in self.sets):
            raise ValueError(f"Every maximum independent set must have size {self.alpha}")
        if len(set(self.sets)) != len(self.sets):
            raise ValueError("Duplicate maximum independent set")

    def __len__(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class ClosedForm:
    """Closed-form invariants a family instance is expected to have."""
    n: int
    m: int
    alpha: Optional[int] = None
    h: Optional[int] = None
    mu: Optional[int] = None

    def as_dict(self) -> Dict[str, Optional[int]]:
        return {"n": self.n, "m": self.m, "alpha": self.alpha, "h": self.h, "mu": self.mu}


@dataclass(frozen=True)
class FamilySpec:
    """
    A family member request: the family, its parameter, and the closed forms
    known for that member (None when nothing is stated).
    """
    family: FamilyKind
    k: Union[int, str]
    expected: Optional[ClosedForm] = None

    @property
    def label(self) -> str:
        if self.family in (FamilyKind.FIXED, FamilyKind.STANDARD):
            return f"{self.family.cli_name}:{self.k}"
        return f"{self.family.cli_name}({self.k})"
