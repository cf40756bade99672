"""
The acceptance suite behind the `verify` command.

Each check returns a CheckResult; the suite passes when every check does.
Random inputs come from a seeded generator so runs are reproducible.
"""
import logging
import random
from typing import Callable, List, Optional, Tuple

from annihilator.domain.errors import AnnihilatorError
from annihilator.domain.models import Classification, FamilyKind, Graph, ThresholdSequence
from annihilator.infrastructure.graph6 import decode_graph6, encode_graph6
from annihilator.schemas.reports import CheckResult, ScanReport, VerificationReport
from annihilator.services.annihilation_service import (
    annihilation_number,
    annihilation_number_of_sequence,
    annihilation_verdict,
    enumerate_maximum_annihilating_sets,
    h_bruteforce,
    sequence_verdict,
    verify_maximum_implies_maximal,
)
from annihilator.services.canonical_service import canonical_form
from annihilator.services.classification_service import (
    verify_alpha_le_2_classification,
    verify_disconnected_alpha3,
)
from annihilator.services.family_service import (
    COUNTEREXAMPLE_MIN_K,
    expected_closed_form,
    family_member,
)
from annihilator.services.graph_service import graph_from_edges
from annihilator.services.independence_service import (
    alpha_bruteforce,
    enumerate_maximum_independent_sets,
    independence_number,
    is_sumi_graph,
    sumi_tree_leaf_check,
)
from annihilator.services.kegraph_service import classify
from annihilator.services.matching_service import matching_number, mu_bruteforce
from annihilator.services.scan_service import (
    ISOLATED_FORWARD_BUCKET,
    ScanService,
    enumerate_graphs,
    enumerate_trees,
)

logger = logging.getLogger(__name__)

SEED = 20240601
PARAMETRISED = [
    FamilyKind.SPIDER_ODD,
    FamilyKind.SPIDER_EVEN,
    FamilyKind.BIPARTITE_EVEN,
    FamilyKind.BIPARTITE_ODD,
    FamilyKind.KE_EVEN,
    FamilyKind.KE_ODD,
]
MIN_K = {FamilyKind.SPIDER_ODD: 1, FamilyKind.SPIDER_EVEN: 1}


def family_instances(k_max: int) -> List[Tuple[FamilyKind, int, Graph]]:
    """Every parametrised family member with k <= k_max."""
    return [
        (kind, k, family_member(kind, k))
        for kind in PARAMETRISED
        for k in range(MIN_K.get(kind, 0), k_max + 1)
    ]


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return graph_from_edges(n, edges)


def random_sequence(rng: random.Random, max_length: int = 12) -> ThresholdSequence:
    length = rng.randint(0, max_length)
    values = sorted(rng.randint(0, 9) for _ in range(length))
    return ThresholdSequence.of(values, rng.randint(-2, sum(values) + 2))


def _universe(max_order: int) -> List[Graph]:
    return [g for n in range(1, max_order + 1) for g in enumerate_graphs(n)]


def check_sequence_semantics() -> CheckResult:
    d3 = ThresholdSequence.of([1, 2, 3, 4, 4], 3)
    d6 = ThresholdSequence.of([1, 2, 3, 4, 4], 6)
    pair = sequence_verdict(d6, [1, 3])
    ok = (
        annihilation_number_of_sequence(d3) == 2
        and annihilation_number_of_sequence(d6) == 3
        and pair.is_maximal
        and not pair.is_maximum
    )
    return CheckResult(name="sequence_semantics", passed=ok, detail="h=2 at theta=3, h=3 at theta=6, (2,4) maximal")


def check_maximum_implies_maximal(max_order: int) -> CheckResult:
    violations = 0
    graphs = _universe(max_order)
    for g in graphs:
        h = annihilation_number(g)
        for s in enumerate_maximum_annihilating_sets(g):
            if not annihilation_verdict(g, s, h=h).is_maximal:
                violations += 1
    rng = random.Random(SEED)
    sequences = [random_sequence(rng) for _ in range(200)]
    violations += sum(1 for d in sequences if not verify_maximum_implies_maximal(d))
    return CheckResult(
        name="maximum_implies_maximal",
        passed=violations == 0,
        detail=f"{len(graphs)} graphs, {len(sequences)} sequences, {violations} violations",
    )


def check_h_lower_bound(max_order: int, k_max: int = 12) -> CheckResult:
    graphs = _universe(max_order) + [g for _, _, g in family_instances(k_max)]
    violations = 0
    for g in graphs:
        if annihilation_number(g) < max(g.n // 2, independence_number(g)):
            violations += 1
    return CheckResult(
        name="h_lower_bound", passed=violations == 0, detail=f"{len(graphs)} graphs, {violations} violations"
    )


def check_forward_scan(max_order: int, scanner: ScanService) -> Tuple[CheckResult, CheckResult, ScanReport]:
    """Forward implication over every graph up to max_order, plus converse certification at order 8."""
    report = scanner.scan_builtin(list(range(1, max_order + 1)), deterministic=True)
    forward = report.buckets["forward_violation"]
    ok = forward == 0 and report.maximum_equivalence_violations == 0 and report.sandwich_violations == 0
    forward_result = CheckResult(
        name="forward_implication_scan",
        passed=ok,
        detail=f"{report.total} graphs, forward_violation={forward}, "
        f"converse_counterexample={report.buckets['converse_counterexample']}, "
        f"excluded with isolated vertices={report.buckets[ISOLATED_FORWARD_BUCKET]}",
    )
    if max_order < 8:
        converse_result = CheckResult(
            name="converse_in_scan", passed=True, detail=f"skipped: scan stops at n={max_order}"
        )
        return forward_result, converse_result, report
    forms = {w.graph6.encode("ascii") for w in report.converse_counterexamples}
    wanted = {
        "bip-even(0)": canonical_form(family_member(FamilyKind.BIPARTITE_EVEN, 0)),
        "ke-even(0)": canonical_form(family_member(FamilyKind.KE_EVEN, 0)),
    }
    missing = [name for name, form in wanted.items() if form not in forms]
    converse_result = CheckResult(
        name="converse_in_scan",
        passed=not missing,
        detail="bip-even(0) and ke-even(0) found" if not missing else f"missing {', '.join(missing)}",
    )
    return forward_result, converse_result, report


def check_family_closed_forms(k_max: int = 12) -> CheckResult:
    mismatches = []
    instances = family_instances(k_max)
    for kind, k, g in instances:
        expected = expected_closed_form(kind, k)
        assert expected is not None
        computed = {
            "n": g.n,
            "m": g.m,
            "alpha": independence_number(g),
            "h": annihilation_number(g),
            "mu": matching_number(g),
        }
        for quantity, value in computed.items():
            if expected.as_dict()[quantity] != value:
                mismatches.append(f"{kind.cli_name}({k}).{quantity}={value}")
    return CheckResult(
        name="family_closed_forms",
        passed=not mismatches,
        detail=f"{len(instances)} instances" if not mismatches else "; ".join(mismatches[:5]),
    )


def _unique_set(g: Graph, names: List[str]) -> bool:
    family = enumerate_maximum_independent_sets(g)
    return len(family) == 1 and family.sets[0] == g.vertex_set(*names)


def check_omega_structure(k_max: int = 4) -> CheckResult:
    failures = []
    g0 = family_member(FamilyKind.BIPARTITE_EVEN, 0)
    omega0 = set(enumerate_maximum_independent_sets(g0).sets)
    if omega0 != {g0.vertex_set("a1", "a2", "a3", "a4"), g0.vertex_set("b1", "b2", "b3", "b4")}:
        failures.append("bip-even(0) Omega")
    for k in range(k_max + 1):
        xs = [f"x{i}" for i in range(1, k + 1)]
        if not _unique_set(family_member(FamilyKind.BIPARTITE_ODD, k), xs + ["a1", "a2", "a3", "a4", "a5"]):
            failures.append(f"bip-odd({k})")
        if not _unique_set(family_member(FamilyKind.KE_EVEN, k), xs + ["a1", "a2", "a3", "a4"]):
            failures.append(f"ke-even({k})")
        if k <= 3 and not _unique_set(family_member(FamilyKind.KE_ODD, k), xs + ["a1", "a2", "a3", "a4", "a5"]):
            failures.append(f"ke-odd({k})")
        if k == 0:
            continue
        g = family_member(FamilyKind.BIPARTITE_EVEN, k)
        a_side = set(g.vertex_set("a1", "a2", "a3", "a4"))
        b_side = set(g.vertex_set("b1", "b2", "b3", "b4"))
        for s in enumerate_maximum_independent_sets(g).sets:
            deg = sum(g.degree(v) for v in s)
            if deg not in (2 * k + 11, 2 * k + 12) or not (a_side <= set(s) or b_side <= set(s)):
                failures.append(f"bip-even({k}) {','.join(s.labels(g))} deg={deg}")
    return CheckResult(
        name="omega_structure",
        passed=not failures,
        detail="unique sets confirmed" if not failures else "; ".join(failures),
    )


def check_converse_families(k_max: int = 4, extra_k: Tuple[int, ...] = (8,)) -> CheckResult:
    failures = []
    count = 0
    for kind in PARAMETRISED:
        start = COUNTEREXAMPLE_MIN_K[kind]
        ks = sorted(set(range(start, max(start, k_max) + 1)) | {k for k in extra_k if k >= start})
        for k in ks:
            report = classify(family_member(kind, k))
            count += 1
            if report.classification != Classification.CONVERSE_COUNTEREXAMPLE:
                failures.append(f"{kind.cli_name}({k})={report.classification.value}")
    return CheckResult(
        name="converse_families",
        passed=not failures,
        detail=f"{count} instances" if not failures else "; ".join(failures),
    )


def check_classification_lists() -> CheckResult:
    small = verify_alpha_le_2_classification()
    disconnected = verify_disconnected_alpha3()
    ok = small.passed and disconnected.passed and len(small.witnesses) == 10 and len(disconnected.witnesses) == 11
    ok = ok and len(disconnected.below_witnesses) == 3
    return CheckResult(
        name="classification_lists",
        passed=ok,
        detail=f"alpha<=2: {len(small.witnesses)} graphs; disconnected alpha=3: "
        f"{len(disconnected.witnesses)} with alpha=h, {len(disconnected.below_witnesses)} with alpha<h",
    )


def check_oracles(max_order: int, random_count: int = 500, random_max_order: int = 12) -> CheckResult:
    rng = random.Random(SEED + 1)
    graphs = _universe(max_order) + [
        random_graph(rng, rng.randint(1, random_max_order), rng.choice([0.2, 0.35, 0.5, 0.7]))
        for _ in range(random_count)
    ]
    mismatches = 0
    for g in graphs:
        if independence_number(g) != alpha_bruteforce(g):
            mismatches += 1
        elif matching_number(g) != mu_bruteforce(g):
            mismatches += 1
        elif annihilation_number(g) != h_bruteforce(g.degrees(), g.m):
            mismatches += 1
    return CheckResult(name="oracles", passed=mismatches == 0, detail=f"{len(graphs)} graphs, {mismatches} mismatches")


def check_sumi_trees(max_order: int = 9) -> CheckResult:
    mismatches = 0
    count = 0
    for n in range(2, max_order + 1):
        for tree in enumerate_trees(n):
            count += 1
            if sumi_tree_leaf_check(tree) != is_sumi_graph(tree):
                mismatches += 1
    return CheckResult(name="sumi_trees", passed=mismatches == 0, detail=f"{count} trees, {mismatches} mismatches")


def check_codec(graphs: List[Graph]) -> CheckResult:
    failures = 0
    for g in graphs:
        text = encode_graph6(g)
        decoded = decode_graph6(text)
        if decoded != g or encode_graph6(decoded) != text:
            failures += 1
    return CheckResult(
        name="graph6_round_trip", passed=failures == 0, detail=f"{len(graphs)} graphs, {failures} failures"
    )


class VerificationService:
    """Runs the acceptance suite."""

    def __init__(self, scanner: Optional[ScanService] = None):
        self.scanner = scanner or ScanService()

    def run(self, quick: bool = False) -> VerificationReport:
        """
        Run every check.

        Args:
            quick: Stop the exhaustive scan at n = 7 instead of 8

        Returns:
            VerificationReport with one CheckResult per check
        """
        scan_order = 7 if quick else 8
        checks: List[CheckResult] = []

        def attempt(name: str, fn: Callable[[], CheckResult]) -> None:
            logger.info(f"Running check {name}")
            try:
                checks.append(fn())
            except AnnihilatorError as e:
                logger.error(f"Check {name} raised {e}")
                checks.append(CheckResult(name=name, passed=False, detail=str(e)))

        attempt("sequence_semantics", check_sequence_semantics)
        attempt("maximum_implies_maximal", lambda: check_maximum_implies_maximal(7))
        attempt("h_lower_bound", lambda: check_h_lower_bound(7))
        try:
            forward, converse, _ = check_forward_scan(scan_order, self.scanner)
            checks += [forward, converse]
        except AnnihilatorError as e:
            checks.append(CheckResult(name="forward_implication_scan", passed=False, detail=str(e)))
        attempt("family_closed_forms", check_family_closed_forms)
        attempt("omega_structure", check_omega_structure)
        attempt("converse_families", check_converse_families)
        attempt("classification_lists", check_classification_lists)
        attempt("oracles", lambda: check_oracles(7))
        attempt("sumi_trees", check_sumi_trees)
        attempt(
            "graph6_round_trip",
            lambda: check_codec(_universe(scan_order) + [g for _, _, g in family_instances(12) if g.n <= 62]),
        )
        passed = all(c.passed for c in checks)
        logger.info(f"Verification finished: passed={passed}")
        return VerificationReport(passed=passed, checks=checks)


_verification_service_instance: Optional[VerificationService] = None


def get_verification_service() -> VerificationService:
    """Get or create the verification service singleton."""
    global _verification_service_instance
    if _verification_service_instance is None:
        _verification_service_instance = VerificationService()
    return _verification_service_instance
