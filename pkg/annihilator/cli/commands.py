"""
Command execution.
run() turns a CommandPlan into an exit code and the text to print.

Exit codes:
    0  success
    1  usage error (bad flags, bad graph6, bad family parameter, unknown name)
    2  analysis budget exceeded or order outside supported bounds
    3  verification failure
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from pydantic import TypeAdapter

from annihilator.cli.parser import Command, CommandPlan, OutputFormat
from annihilator.domain.errors import (
    AnnihilatorError,
    BadParameterError,
    FamilyNotFoundError,
    Graph6Error,
    InvalidGraphError,
    NotATreeError,
    UnsupportedError,
    UsageError,
)
from annihilator.domain.models import Graph
from annihilator.infrastructure.graph6 import decode_graph6, encode_graph6, read_graph6_file, read_graph6_stream
from annihilator.schemas.reports import (
    AnalysisReport,
    ClosedFormRow,
    FamilyReport,
    ScanReport,
    UniverseDescription,
    VerificationReport,
)
from annihilator.services.annihilation_service import annihilation_number
from annihilator.services.family_service import get_family_service
from annihilator.services.independence_service import independence_number
from annihilator.services.kegraph_service import classify
from annihilator.services.matching_service import matching_number
from annihilator.services.scan_service import ALPHA3_CONNECTED_FILTER, ScanFilter, ScanService
from annihilator.services.verification_service import VerificationService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_VERIFICATION_FAILED = 3

USAGE_ERRORS = (UsageError, Graph6Error, InvalidGraphError, BadParameterError, FamilyNotFoundError, NotATreeError)

ANALYSIS_TSV_COLUMNS = [
    "graph6", "n", "m", "alpha", "mu", "h", "is_bipartite", "is_ke",
    "in_conjecture_scope", "condition_i", "condition_ii", "classification",
]


@dataclass
class CommandResult:
    """Exit code plus what goes to stdout and stderr."""
    exit_code: int
    output: str = ""
    error: str = ""


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _tsv(rows: List[List[object]]) -> str:
    return "\n".join("\t".join(str(cell) for cell in row) for row in rows) + "\n"


# analyze

def _analysis_text(report: AnalysisReport) -> str:
    lines = [
        f"graph6: {report.graph6}",
        f"n={report.n} m={report.m} alpha={report.alpha} mu={report.mu} h={report.h}",
        f"degree sequence: {' '.join(str(d) for d in report.degree_sequence)}",
        f"bipartite: {_yes(report.is_bipartite)}  KE: {_yes(report.is_ke)}  "
        f"in scope (h >= n/2): {_yes(report.in_conjecture_scope)}",
        f"condition (i) alpha = h: {_yes(report.condition_i)}",
        f"condition (ii) KE and every MIS maximal annihilating: {_yes(report.condition_ii)}",
        f"classification: {report.classification.value}",
        f"maximum independent sets ({len(report.mis_annotations)}):",
    ]
    for a in report.mis_annotations:
        members = a.labels if a.labels is not None else [str(v) for v in a.set]
        flags = [
            "annihilating" if a.annihilating else "not annihilating",
            "maximal" if a.maximal else "not maximal",
            "maximum" if a.maximum else "not maximum",
        ]
        lines.append(f"  {{{', '.join(members)}}}  deg={a.deg_sum}  {', '.join(flags)}")
    return "\n".join(lines) + "\n"


def _analysis_row(report: AnalysisReport) -> List[object]:
    values = report.model_dump(mode="json")
    return [values[column] for column in ANALYSIS_TSV_COLUMNS]


def _render_analyses(reports: List[AnalysisReport], fmt: OutputFormat, as_list: bool) -> str:
    if fmt == OutputFormat.JSON:
        if as_list:
            return TypeAdapter(List[AnalysisReport]).dump_json(reports, indent=2).decode("utf-8") + "\n"
        return reports[0].model_dump_json(indent=2) + "\n"
    if fmt == OutputFormat.TSV:
        return _tsv([ANALYSIS_TSV_COLUMNS] + [_analysis_row(r) for r in reports])
    return "\n".join(_analysis_text(r) for r in reports)


def _analysis_inputs(plan: CommandPlan) -> List[Graph]:
    if plan.g6 is not None:
        return [decode_graph6(plan.g6)]
    if plan.family is not None:
        return [get_family_service().generate(plan.family, plan.k)]
    lines = read_graph6_file(plan.file) if plan.file is not None else read_graph6_stream()
    return [decode_graph6(line) for line in lines]


def run_analyze(plan: CommandPlan) -> CommandResult:
    graphs = _analysis_inputs(plan)
    reports = [classify(g, budget=plan.budget) for g in graphs]
    as_list = plan.file is not None or plan.stdin
    return CommandResult(EXIT_OK, _render_analyses(reports, plan.format, as_list))


# family

def family_report(name: str, k: Optional[int]) -> FamilyReport:
    """Generate a family member and compare its invariants with the closed forms."""
    service = get_family_service()
    member = service.resolve(name, k)
    g = service.build(member)
    computed = {
        "n": g.n,
        "m": g.m,
        "alpha": independence_number(g),
        "h": annihilation_number(g),
        "mu": matching_number(g),
    }
    expected: Dict[str, Optional[int]] = member.expected.as_dict() if member.expected else {}
    rows = []
    for quantity, value in computed.items():
        want = expected.get(quantity)
        rows.append(
            ClosedFormRow(
                quantity=quantity,
                expected=want,
                computed=value,
                matches=None if want is None else want == value,
            )
        )
        if want is not None and want != value:
            logger.warning(f"{member.label}: {quantity}={value}, closed form gives {want}")
    return FamilyReport(
        family=name,
        k=str(member.k),
        graph6=encode_graph6(g),
        vertex_names=list(g.vertex_names) if g.vertex_names is not None else None,
        edges=[[g.name(u), g.name(v)] for u, v in g.edges()],
        closed_forms=rows,
    )


def _family_text(report: FamilyReport) -> str:
    lines = [f"{report.family} k={report.k}", f"graph6: {report.graph6}"]
    if report.vertex_names is not None:
        lines.append(f"vertices: {' '.join(report.vertex_names)}")
    lines.append(f"edges: {' '.join(f'{u}-{v}' for u, v in report.edges)}")
    lines.append(f"{'quantity':<10}{'expected':>10}{'computed':>10}  status")
    for row in report.closed_forms:
        expected = "-" if row.expected is None else str(row.expected)
        status = "" if row.matches is None else ("ok" if row.matches else "MISMATCH")
        lines.append(f"{row.quantity:<10}{expected:>10}{row.computed:>10}  {status}".rstrip())
    return "\n".join(lines) + "\n"


def run_family(plan: CommandPlan) -> CommandResult:
    assert plan.family is not None
    if plan.emit == "g6":
        g = get_family_service().generate(plan.family, plan.k)
        return CommandResult(EXIT_OK, encode_graph6(g) + "\n")
    report = family_report(plan.family, plan.k)
    if plan.format == OutputFormat.JSON:
        output = report.model_dump_json(indent=2) + "\n"
    elif plan.format == OutputFormat.TSV:
        output = _tsv(
            [["quantity", "expected", "computed", "matches"]]
            + [
                [
                    r.quantity,
                    "" if r.expected is None else r.expected,
                    r.computed,
                    "" if r.matches is None else r.matches,
                ]
                for r in report.closed_forms
            ]
        )
    else:
        output = _family_text(report)
    return CommandResult(EXIT_OK, output)


# scan

def _scan_text(report: ScanReport) -> str:
    lines = [
        f"source: {report.universe.source}" + (f" n={report.universe.n}" if report.universe.n else ""),
        f"examined: {report.examined}  kept: {report.total}",
    ]
    lines += [f"  {bucket}: {count}" for bucket, count in report.buckets.items()]
    lines.append(f"budget exceeded: {len(report.budget_exceeded)}")
    if report.invalid_lines:
        lines.append(f"invalid lines: {len(report.invalid_lines)}")
    lines.append(f"maximum-set equivalence violations: {report.maximum_equivalence_violations}")
    lines.append(f"sandwich violations: {report.sandwich_violations}")
    lines.append(f"h lower bound violations: {report.h_lower_bound_violations}")
    for title, witnesses in (
        ("forward violations", report.forward_violations),
        ("forward violations with isolated vertices", report.isolated_forward_violations),
        ("converse counterexamples", report.converse_counterexamples),
        ("alpha < h", report.alpha_below_h),
    ):
        if witnesses:
            lines.append(f"{title}:")
            lines += [f"  {w.graph6}  n={w.report.n} alpha={w.report.alpha} h={w.report.h}" for w in witnesses]
    if report.elapsed_seconds is not None:
        lines.append(f"elapsed: {report.elapsed_seconds:.3f}s")
    return "\n".join(lines) + "\n"


def _scan_tsv(report: ScanReport) -> str:
    rows: List[List[object]] = [["bucket", "count"]]
    rows += [[bucket, count] for bucket, count in report.buckets.items()]
    rows.append(["budget_exceeded", len(report.budget_exceeded)])
    rows.append(["invalid_lines", len(report.invalid_lines)])
    return _tsv(rows)


def run_scan(plan: CommandPlan) -> CommandResult:
    scanner = ScanService(workers=plan.threads, budget=plan.budget, show_progress=plan.progress or None)
    if plan.alpha3_connected:
        scan_filter = ALPHA3_CONNECTED_FILTER
    else:
        scan_filter = ScanFilter(connected_only=plan.connected, alpha=plan.alpha, ke_only=plan.ke_only)
    if plan.orders is not None:
        report = scanner.scan_builtin(plan.orders, scan_filter, deterministic=plan.deterministic)
    elif plan.file is not None:
        universe = UniverseDescription(source=f"file:{plan.file}")
        report = scanner.scan(read_graph6_file(plan.file), scan_filter, universe, deterministic=plan.deterministic)
    else:
        universe = UniverseDescription(source="stdin")
        report = scanner.scan(read_graph6_stream(), scan_filter, universe, deterministic=plan.deterministic)

    renderers: Dict[OutputFormat, Callable[[ScanReport], str]] = {
        OutputFormat.JSON: lambda r: r.model_dump_json(indent=2) + "\n",
        OutputFormat.TSV: _scan_tsv,
        OutputFormat.TEXT: _scan_text,
    }
    if report.invalid_lines:
        exit_code = EXIT_USAGE
    elif report.budget_exceeded:
        exit_code = EXIT_BUDGET
    else:
        exit_code = EXIT_OK
    return CommandResult(exit_code, renderers[plan.format](report))


# verify

def _verification_text(report: VerificationReport) -> str:
    width = max((len(c.name) for c in report.checks), default=0)
    lines = [f"{c.name:<{width}}  {'PASS' if c.passed else 'FAIL'}  {c.detail}" for c in report.checks]
    lines.append(f"{'overall':<{width}}  {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def run_verify(plan: CommandPlan) -> CommandResult:
    scanner = ScanService(workers=plan.threads, budget=plan.budget, show_progress=plan.progress or None)
    report = VerificationService(scanner=scanner).run(quick=plan.quick)
    if plan.format == OutputFormat.JSON:
        output = report.model_dump_json(indent=2) + "\n"
    elif plan.format == OutputFormat.TSV:
        output = _tsv([["check", "passed", "detail"]] + [[c.name, c.passed, c.detail] for c in report.checks])
    else:
        output = _verification_text(report)
    return CommandResult(EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED, output)


HANDLERS: Dict[Command, Callable[[CommandPlan], CommandResult]] = {
    Command.ANALYZE: run_analyze,
    Command.FAMILY: run_family,
    Command.SCAN: run_scan,
    Command.VERIFY: run_verify,
}


def run(plan: CommandPlan) -> CommandResult:
    """
    Execute a plan.

    Args:
        plan: Validated CommandPlan

    Returns:
        CommandResult with the exit code, the report text and any error message
    """
    logger.info(f"Running {plan.command.value}")
    try:
        return HANDLERS[plan.command](plan)
    except USAGE_ERRORS as e:
        logger.error(f"Usage error: {e}")
        return CommandResult(EXIT_USAGE, error=f"error: {e}\n")
    except UnsupportedError as e:
        logger.error(f"Unsupported: {e}")
        return CommandResult(EXIT_BUDGET, error=f"error: {e}\n")
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"Cannot read input: {e}")
        return CommandResult(EXIT_USAGE, error=f"error: {e}\n")
    except AnnihilatorError as e:
        logger.error(f"Unexpected failure: {e}")
        return CommandResult(EXIT_USAGE, error=f"error: {e}\n")
