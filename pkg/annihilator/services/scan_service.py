"""
Isomorphism-free enumeration of small graphs and conjecture scans over
enumerated or streamed graph6 collections.

Graphs of order n are grown from the representatives of order n-1 by adding a
vertex with every possible neighbourhood; a new graph is kept only when its
canonical form has not been seen before. Scans split their input into chunks
of graph6 lines, analyze chunks (in worker processes when configured), and
merge the per-chunk tallies by addition.
"""
import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice
from multiprocessing import Pool
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from tqdm import tqdm

from annihilator.config import get_settings
from annihilator.domain.errors import EnumerationBudgetExceeded, Graph6Error, UnsupportedError
from annihilator.domain.models import Classification, Graph
from annihilator.infrastructure.graph6 import decode_graph6, encode_graph6
from annihilator.schemas.reports import AnalysisReport, ScanReport, ScanWitness, UniverseDescription
from annihilator.services.canonical_service import CANONICAL_MAX_ORDER, canonical_form
from annihilator.services.graph_service import is_connected
from annihilator.services.kegraph_service import classify

logger = logging.getLogger(__name__)

MAX_BUILTIN_ORDER = 8
ISOLATED_FORWARD_BUCKET = "forward_violation_isolated"


@lru_cache(maxsize=None)
def _representatives(n: int) -> Tuple[str, ...]:
    """Canonical graph6 strings of every graph of order n, in generation order."""
    if n == 0:
        return ("?",)
    seen = set()
    found: List[str] = []
    new_bit = 1 << (n - 1)
    for parent_text in _representatives(n - 1):
        parent = decode_graph6(parent_text)
        for neighbourhood in range(1 << (n - 1)):
            rows = [row | new_bit if neighbourhood >> v & 1 else row for v, row in enumerate(parent.adjacency)]
            rows.append(neighbourhood)
            form = canonical_form(Graph(n=n, adjacency=tuple(rows)))
            if form not in seen:
                seen.add(form)
                found.append(form.decode("ascii"))
    logger.info(f"Enumerated {len(found)} graphs of order {n}")
    return tuple(found)


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """
    One canonically labelled representative per isomorphism class of order n.

    Args:
        n: Order, 1..8
        connected_only: Skip disconnected graphs

    Raises:
        UnsupportedError: if n is outside 1..8
    """
    if not 1 <= n <= MAX_BUILTIN_ORDER:
        raise UnsupportedError(f"Built-in enumeration supports 1 <= n <= {MAX_BUILTIN_ORDER}, got {n}")
    for text in _representatives(n):
        g = decode_graph6(text)
        if connected_only and not is_connected(g):
            continue
        yield g


def enumerate_graphs_upto(n_max: int, connected_only: bool = False) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from enumerate_graphs(n, connected_only)


@lru_cache(maxsize=None)
def _tree_representatives(n: int) -> Tuple[str, ...]:
    if n == 1:
        return ("@",)
    seen = set()
    found: List[str] = []
    for parent_text in _tree_representatives(n - 1):
        parent = decode_graph6(parent_text)
        for v in range(n - 1):
            rows = list(parent.adjacency)
            rows[v] |= 1 << (n - 1)
            rows.append(1 << v)
            form = canonical_form(Graph(n=n, adjacency=tuple(rows)))
            if form not in seen:
                seen.add(form)
                found.append(form.decode("ascii"))
    return tuple(found)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """
    One representative per isomorphism class of trees of order n, grown by
    attaching a leaf; orders up to the canonical-form bound are supported.
    """
    if not 1 <= n <= CANONICAL_MAX_ORDER:
        raise UnsupportedError(f"Tree enumeration supports 1 <= n <= {CANONICAL_MAX_ORDER}, got {n}")
    for text in _tree_representatives(n):
        yield decode_graph6(text)


@dataclass(frozen=True)
class ScanFilter:
    """
    Which graphs a scan keeps. Connectivity is checked before analysis; the
    remaining predicates are applied to the analysis report.
    """
    connected_only: bool = False
    alpha: Optional[int] = None
    ke_only: bool = False
    in_scope_only: bool = False
    condition_ii_only: bool = False

    def accepts(self, report: AnalysisReport) -> bool:
        if self.alpha is not None and report.alpha != self.alpha:
            return False
        if self.ke_only and not report.is_ke:
            return False
        if self.in_scope_only and not report.in_conjecture_scope:
            return False
        if self.condition_ii_only and not report.condition_ii:
            return False
        return True

    def describe(self) -> Dict[str, Optional[int]]:
        described: Dict[str, Optional[int]] = {}
        if self.alpha is not None:
            described["alpha"] = self.alpha
        if self.ke_only:
            described["ke_only"] = 1
        if self.in_scope_only:
            described["in_scope_only"] = 1
        if self.condition_ii_only:
            described["condition_ii_only"] = 1
        return described


ALPHA3_CONNECTED_FILTER = ScanFilter(
    connected_only=True, alpha=3, ke_only=True, in_scope_only=True, condition_ii_only=True
)


def bucket_of(report: AnalysisReport) -> str:
    """Scan bucket of a report; forward violations with isolated vertices are kept apart."""
    if report.classification == Classification.FORWARD_VIOLATION and report.has_isolated_vertices:
        return ISOLATED_FORWARD_BUCKET
    return report.classification.value


@dataclass
class ScanTally:
    """Partial scan result; tallies combine by addition."""
    examined: int = 0
    total: int = 0
    buckets: Counter = field(default_factory=Counter)
    budget_exceeded: List[str] = field(default_factory=list)
    forward_violations: List[ScanWitness] = field(default_factory=list)
    isolated_forward_violations: List[ScanWitness] = field(default_factory=list)
    converse_counterexamples: List[ScanWitness] = field(default_factory=list)
    alpha_below_h: List[ScanWitness] = field(default_factory=list)
    invalid_lines: List[str] = field(default_factory=list)
    maximum_equivalence_violations: int = 0
    sandwich_violations: int = 0
    h_lower_bound_violations: int = 0

    def __add__(self, other: "ScanTally") -> "ScanTally":
        return ScanTally(
            examined=self.examined + other.examined,
            total=self.total + other.total,
            buckets=self.buckets + other.buckets,
            budget_exceeded=self.budget_exceeded + other.budget_exceeded,
            forward_violations=self.forward_violations + other.forward_violations,
            isolated_forward_violations=self.isolated_forward_violations + other.isolated_forward_violations,
            converse_counterexamples=self.converse_counterexamples + other.converse_counterexamples,
            alpha_below_h=self.alpha_below_h + other.alpha_below_h,
            invalid_lines=self.invalid_lines + other.invalid_lines,
            maximum_equivalence_violations=self.maximum_equivalence_violations + other.maximum_equivalence_violations,
            sandwich_violations=self.sandwich_violations + other.sandwich_violations,
            h_lower_bound_violations=self.h_lower_bound_violations + other.h_lower_bound_violations,
        )

    def add_report(self, text: str, report: AnalysisReport, collect_alpha_below_h: bool) -> None:
        self.total += 1
        bucket = bucket_of(report)
        self.buckets[bucket] += 1
        if bucket == ISOLATED_FORWARD_BUCKET:
            self.isolated_forward_violations.append(ScanWitness(graph6=text, report=report))
        elif report.classification == Classification.FORWARD_VIOLATION:
            self.forward_violations.append(ScanWitness(graph6=text, report=report))
        elif report.classification == Classification.CONVERSE_COUNTEREXAMPLE:
            self.converse_counterexamples.append(ScanWitness(graph6=text, report=report))
        if collect_alpha_below_h and report.alpha < report.h:
            self.alpha_below_h.append(ScanWitness(graph6=text, report=report))
        if not report.maximum_equivalence_holds:
            self.maximum_equivalence_violations += 1
        if not report.sandwich_holds:
            self.sandwich_violations += 1
        if not report.h_lower_bound_holds:
            self.h_lower_bound_violations += 1


def scan_chunk(lines: List[str], scan_filter: ScanFilter, budget: int) -> ScanTally:
    """Analyze one chunk of graph6 lines; runs inside worker processes."""
    tally = ScanTally()
    for text in lines:
        tally.examined += 1
        try:
            g = decode_graph6(text)
        except Graph6Error as e:
            logger.warning(f"Skipping invalid graph6 line {text!r}: {e}")
            tally.invalid_lines.append(text)
            continue
        if scan_filter.connected_only and not is_connected(g):
            continue
        try:
            report = classify(g, budget=budget)
        except EnumerationBudgetExceeded:
            logger.warning(f"Enumeration budget exceeded for {text}")
            tally.total += 1
            tally.budget_exceeded.append(text)
            continue
        if scan_filter.accepts(report):
            tally.add_report(text, report, collect_alpha_below_h=scan_filter.alpha is not None)
    return tally


def _scan_chunk_args(args: Tuple[List[str], ScanFilter, int]) -> ScanTally:
    return scan_chunk(*args)


def _chunks(lines: Iterable[str], size: int) -> Iterator[List[str]]:
    iterator = iter(lines)
    while True:
        chunk = list(islice(iterator, size))
        if not chunk:
            return
        yield chunk


def _as_graph6(source: Iterable[Union[Graph, str]]) -> Iterator[str]:
    for item in source:
        yield item if isinstance(item, str) else encode_graph6(item)


def _bucket_counts(buckets: Counter) -> Dict[str, int]:
    counts = {c.value: buckets.get(c.value, 0) for c in Classification}
    counts[ISOLATED_FORWARD_BUCKET] = buckets.get(ISOLATED_FORWARD_BUCKET, 0)
    return counts


def _by_graph6(witnesses: List[ScanWitness]) -> List[ScanWitness]:
    return sorted(witnesses, key=lambda w: w.graph6)


class ScanService:
    """
    Runs conjecture scans.
    Worker count, chunk size and enumeration budget come from settings unless overridden.
    """

    def __init__(
        self,
        workers: Optional[int] = None,
        chunk_size: Optional[int] = None,
        budget: Optional[int] = None,
        show_progress: Optional[bool] = None,
    ):
        settings = get_settings()
        self.workers = workers if workers is not None else settings.worker_count
        self.chunk_size = chunk_size if chunk_size is not None else settings.SCAN_CHUNK_SIZE
        self.budget = budget if budget is not None else settings.ENUMERATION_BUDGET
        self.show_progress = show_progress if show_progress is not None else settings.SHOW_PROGRESS

    def _run_chunks(self, chunks: Iterable[List[str]], scan_filter: ScanFilter) -> ScanTally:
        work = ((chunk, scan_filter, self.budget) for chunk in chunks)
        tally = ScanTally()
        with tqdm(unit="graph", disable=not self.show_progress) as progress:
            if self.workers > 1:
                with Pool(processes=self.workers) as pool:
                    for part in pool.imap(_scan_chunk_args, work):
                        tally = tally + part
                        progress.update(part.examined)
            else:
                for item in work:
                    part = _scan_chunk_args(item)
                    tally = tally + part
                    progress.update(part.examined)
        return tally

    def scan(
        self,
        source: Iterable[Union[Graph, str]],
        scan_filter: Optional[ScanFilter] = None,
        universe: Optional[UniverseDescription] = None,
        deterministic: bool = False,
    ) -> ScanReport:
        """
        Analyze every graph of a source and aggregate the verdicts.

        Args:
            source: Graphs or graph6 lines, consumed in order
            scan_filter: Which graphs to keep (all by default)
            universe: Description of the source for the report
            deterministic: Leave elapsed_seconds unset

        Returns:
            ScanReport whose bucket totals plus budget failures equal total
        """
        scan_filter = scan_filter or ScanFilter()
        if universe is None:
            universe = UniverseDescription(source="stream")
        universe = universe.model_copy(
            update={"connected_only": scan_filter.connected_only, "filters": scan_filter.describe()}
        )
        started = time.perf_counter()
        logger.info(f"Scan started over {universe.source} with {self.workers} worker(s)")
        tally = self._run_chunks(_chunks(_as_graph6(source), self.chunk_size), scan_filter)
        elapsed = time.perf_counter() - started
        logger.info(f"Scan finished: {tally.examined} examined, {tally.total} kept in {elapsed:.2f}s")

        return ScanReport(
            universe=universe,
            examined=tally.examined,
            total=tally.total,
            buckets=_bucket_counts(tally.buckets),
            budget_exceeded=sorted(tally.budget_exceeded),
            forward_violations=_by_graph6(tally.forward_violations),
            isolated_forward_violations=_by_graph6(tally.isolated_forward_violations),
            converse_counterexamples=_by_graph6(tally.converse_counterexamples),
            alpha_below_h=_by_graph6(tally.alpha_below_h),
            invalid_lines=tally.invalid_lines,
            maximum_equivalence_violations=tally.maximum_equivalence_violations,
            sandwich_violations=tally.sandwich_violations,
            h_lower_bound_violations=tally.h_lower_bound_violations,
            elapsed_seconds=None if deterministic else round(elapsed, 3),
        )

    def scan_builtin(
        self, orders: List[int], scan_filter: Optional[ScanFilter] = None, deterministic: bool = False
    ) -> ScanReport:
        """Scan every graph of the given orders from the built-in enumerator."""
        scan_filter = scan_filter or ScanFilter()
        for n in orders:
            if not 1 <= n <= MAX_BUILTIN_ORDER:
                raise UnsupportedError(f"Built-in enumeration supports 1 <= n <= {MAX_BUILTIN_ORDER}, got {n}")
        source = (g for n in orders for g in enumerate_graphs(n, scan_filter.connected_only))
        universe = UniverseDescription(source="builtin", n=list(orders))
        return self.scan(source, scan_filter, universe=universe, deterministic=deterministic)

    def scan_alpha3_connected(
        self,
        n_max: int,
        source: Optional[Iterable[Union[Graph, str]]] = None,
        deterministic: bool = False,
    ) -> ScanReport:
        """
        Connected KE graphs with alpha = 3, h >= n/2 and condition (ii); any
        with alpha < h is listed in alpha_below_h.

        Args:
            n_max: Largest order for the built-in enumerator (ignored with a source)
            source: Optional graph6 stream replacing the built-in enumerator
        """
        if source is not None:
            return self.scan(source, ALPHA3_CONNECTED_FILTER, deterministic=deterministic)
        return self.scan_builtin(list(range(1, n_max + 1)), ALPHA3_CONNECTED_FILTER, deterministic=deterministic)


_scan_service_instance: Optional[ScanService] = None


def get_scan_service() -> ScanService:
    """Get or create the scan service singleton."""
    global _scan_service_instance
    if _scan_service_instance is None:
        _scan_service_instance = ScanService()
    return _scan_service_instance
