"""
Pydantic schemas for serialized reports.
Field order is the JSON key order, so identical runs give byte-identical output.
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from annihilator.domain.models import Classification


class MisAnnotation(BaseModel):
    """Annihilation verdict for one maximum independent set."""
    set: List[int] = Field(..., description="Vertex indices of the set, ascending")
    labels: Optional[List[str]] = Field(None, description="Display labels of the vertices, when the graph is named")
    deg_sum: int = Field(..., description="Sum of the degrees of the set")
    annihilating: bool = Field(..., description="deg_sum <= m")
    maximal: bool = Field(..., description="No outside vertex can be added without exceeding m")
    maximum: bool = Field(..., description="Annihilating and of size h")
    maximal_non_maximum: bool = Field(..., description="Maximal annihilating but smaller than h")


class AnalysisReport(BaseModel):
    """Full per-graph verdict record."""
    graph6: Optional[str] = Field(None, description="graph6 encoding of the analyzed graph")
    n: int = Field(..., ge=0, description="Vertex count")
    m: int = Field(..., ge=0, description="Edge count")
    degree_sequence: List[int] = Field(..., description="Nondecreasing degrees")
    alpha: int = Field(..., description="Independence number")
    mu: int = Field(..., description="Matching number")
    h: int = Field(..., description="Annihilation number")
    is_bipartite: bool = Field(..., description="Graph has a proper 2-colouring")
    is_ke: bool = Field(..., description="alpha + mu = n")
    in_conjecture_scope: bool = Field(..., description="h >= n/2 as rationals")
    has_isolated_vertices: bool = Field(..., description="Some vertex has degree 0")
    condition_i: bool = Field(..., description="alpha = h")
    condition_ii: bool = Field(..., description="KE and every maximum independent set is maximal annihilating")
    mis_annotations: List[MisAnnotation] = Field(..., description="One record per maximum independent set")
    classification: Classification = Field(..., description="Conjecture bucket")
    every_mis_maximum: bool = Field(..., description="Every maximum independent set is a maximum annihilating set")
    some_mis_maximum: bool = Field(..., description="Some maximum independent set is a maximum annihilating set")
    maximum_equivalence_holds: bool = Field(
        ...,
        description="In scope without isolated vertices: alpha = h iff KE with every (equivalently some) "
        "MIS maximum annihilating",
    )
    sandwich_holds: bool = Field(..., description="floor(n/2)+1 <= alpha+mu <= n <= alpha+2mu (n >= 1)")
    h_lower_bound_holds: bool = Field(..., description="h >= max(floor(n/2), alpha)")

    class Config:
        """Pydantic config."""
        json_schema_extra = {
            "example": {
                "graph6": "@",
                "n": 1,
                "m": 0,
                "degree_sequence": [0],
                "alpha": 1,
                "mu": 0,
                "h": 1,
                "is_bipartite": True,
                "is_ke": True,
                "in_conjecture_scope": True,
                "has_isolated_vertices": True,
                "condition_i": True,
                "condition_ii": True,
                "mis_annotations": [
                    {
                        "set": [0],
                        "labels": None,
                        "deg_sum": 0,
                        "annihilating": True,
                        "maximal": True,
                        "maximum": True,
                        "maximal_non_maximum": False,
                    }
                ],
                "classification": "consistent",
                "every_mis_maximum": True,
                "some_mis_maximum": True,
                "maximum_equivalence_holds": True,
                "sandwich_holds": True,
                "h_lower_bound_holds": True,
            }
        }


class ScanWitness(BaseModel):
    """A graph listed in a scan report together with its analysis."""
    graph6: str = Field(..., description="graph6 encoding")
    report: AnalysisReport = Field(..., description="Analysis of the graph")


class UniverseDescription(BaseModel):
    """What a scan ran over."""
    source: str = Field(..., description="builtin, file:<path> or stdin")
    n: Optional[List[int]] = Field(None, description="Orders enumerated by the builtin generator")
    connected_only: bool = Field(False, description="Only connected graphs were analyzed")
    filters: Dict[str, Optional[int]] = Field(default_factory=dict, description="Post-analysis filters in force")


class ScanReport(BaseModel):
    """Aggregate over an enumerated or streamed graph collection."""
    universe: UniverseDescription = Field(..., description="Scan input description")
    examined: int = Field(..., description="Graphs read from the source")
    total: int = Field(..., description="Graphs passing every filter (bucket totals plus budget failures)")
    buckets: Dict[str, int] = Field(
        ..., description="Count per classification; forward violations with isolated vertices are counted apart"
    )
    budget_exceeded: List[str] = Field(
        default_factory=list, description="graph6 of graphs whose analysis hit the budget"
    )
    forward_violations: List[ScanWitness] = Field(
        default_factory=list, description="forward_violation graphs without isolated vertices"
    )
    isolated_forward_violations: List[ScanWitness] = Field(
        default_factory=list, description="forward_violation graphs with isolated vertices, outside the forward claim"
    )
    converse_counterexamples: List[ScanWitness] = Field(
        default_factory=list, description="converse_counterexample graphs"
    )
    alpha_below_h: List[ScanWitness] = Field(
        default_factory=list, description="Filtered graphs with alpha < h (used by the alpha = 3 scan)"
    )
    invalid_lines: List[str] = Field(default_factory=list, description="Input lines that are not valid graph6")
    maximum_equivalence_violations: int = Field(0, description="Reports whose maximum_equivalence_holds is false")
    sandwich_violations: int = Field(0, description="Reports whose sandwich_holds is false")
    h_lower_bound_violations: int = Field(0, description="Reports whose h_lower_bound_holds is false")
    elapsed_seconds: Optional[float] = Field(None, description="Wall time; omitted in deterministic mode")

    class Config:
        """Pydantic config."""
        json_schema_extra = {
            "example": {
                "universe": {"source": "builtin", "n": [5], "connected_only": False, "filters": {}},
                "examined": 34,
                "total": 34,
                "buckets": {
                    "consistent": 20,
                    "forward_violation": 0,
                    "converse_counterexample": 0,
                    "out_of_scope": 14,
                    "forward_violation_isolated": 0,
                },
                "budget_exceeded": [],
                "forward_violations": [],
                "isolated_forward_violations": [],
                "converse_counterexamples": [],
                "alpha_below_h": [],
                "invalid_lines": [],
                "maximum_equivalence_violations": 0,
                "sandwich_violations": 0,
                "h_lower_bound_violations": 0,
                "elapsed_seconds": None,
            }
        }


class ClosedFormRow(BaseModel):
    """One invariant compared against its closed form."""
    quantity: str = Field(..., description="n, m, alpha, h or mu")
    expected: Optional[int] = Field(None, description="Closed-form value, when known")
    computed: int = Field(..., description="Value computed on the generated graph")
    matches: Optional[bool] = Field(None, description="expected == computed, or None without a closed form")


class FamilyReport(BaseModel):
    """A generated family member with its closed-form comparison table."""
    family: str = Field(..., description="Family name as given on the command line")
    k: str = Field(..., description="Family parameter or catalog name")
    graph6: str = Field(..., description="graph6 encoding of the generated graph")
    vertex_names: Optional[List[str]] = Field(None, description="Display labels in vertex order")
    edges: List[List[str]] = Field(..., description="Edges by display label")
    closed_forms: List[ClosedFormRow] = Field(..., description="Expected versus computed invariants")


class CheckResult(BaseModel):
    """Outcome of one verification check."""
    name: str = Field(..., description="Check identifier")
    passed: bool = Field(..., description="Whether the check passed")
    detail: str = Field("", description="Short human-readable summary")


class VerificationReport(BaseModel):
    """Outcome of the full verification suite."""
    passed: bool = Field(..., description="Every check passed")
    checks: List[CheckResult] = Field(..., description="Per-check outcomes, in run order")
