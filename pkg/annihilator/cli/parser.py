"""
Command-line parsing.
Turns argv into a validated CommandPlan; every parse failure is a UsageError.
"""
import argparse
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence

from annihilator.domain.errors import UsageError
from annihilator.services.scan_service import MAX_BUILTIN_ORDER


class OutputFormat(str, Enum):
    """Report serialization."""
    TEXT = "text"
    JSON = "json"
    TSV = "tsv"


class Command(str, Enum):
    """CLI subcommands."""
    ANALYZE = "analyze"
    FAMILY = "family"
    SCAN = "scan"
    VERIFY = "verify"


@dataclass
class CommandPlan:
    """
    A validated invocation.

    Exactly one input source is set for analyze and scan: g6, file, stdin,
    family (analyze only) or orders (scan only).
    """
    command: Command
    format: OutputFormat = OutputFormat.TEXT
    g6: Optional[str] = None
    file: Optional[str] = None
    stdin: bool = False
    family: Optional[str] = None
    k: Optional[int] = None
    emit: Optional[str] = None
    orders: Optional[List[int]] = None
    connected: bool = False
    alpha: Optional[int] = None
    ke_only: bool = False
    alpha3_connected: bool = False
    quick: bool = False
    deterministic: bool = False
    budget: Optional[int] = None
    threads: Optional[int] = None
    progress: bool = False

    @property
    def input_sources(self) -> List[str]:
        sources = []
        if self.g6 is not None:
            sources.append("--g6")
        if self.file is not None:
            sources.append("--file")
        if self.stdin:
            sources.append("--stdin")
        if self.family is not None and self.command == Command.ANALYZE:
            sources.append("--family")
        if self.orders is not None:
            sources.append("--n/--max-n")
        return sources


class PlanArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="Output format (default: text)",
    )
    parser.add_argument("--deterministic", action="store_true", help="Omit timing fields from reports")
    parser.add_argument("--budget", type=_positive_int, help="Maximum independent sets retained per graph")


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--g6", help="A graph6 string")
    parser.add_argument("--file", help="A file of graph6 lines")
    parser.add_argument("--stdin", action="store_true", help="Read graph6 lines from standard input")


def build_parser() -> PlanArgumentParser:
    parser = PlanArgumentParser(
        prog="annihilator",
        description="Annihilation numbers, König-Egerváry graphs and conjecture scans.",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    analyze = commands.add_parser("analyze", help="Analyze graphs given as graph6 or by family")
    _add_input(analyze)
    analyze.add_argument("--family", help="Family name, fixed:<id> or std:<kind>")
    analyze.add_argument("--k", type=_nonnegative_int, help="Family parameter")
    _add_common(analyze)

    family = commands.add_parser("family", help="Generate a family member and compare closed forms")
    family.add_argument(
        "name", help="spider-odd, spider-even, bip-even, bip-odd, ke-even, ke-odd, fixed:<id>, std:<kind>"
    )
    family.add_argument("--k", type=_nonnegative_int, help="Family parameter")
    family.add_argument(
        "--emit", choices=["g6", "report"], default="report", help="Emit only graph6, or the full report"
    )
    _add_common(family)

    scan = commands.add_parser("scan", help="Scan enumerated or streamed graphs")
    scan.add_argument("--n", type=int, help=f"Scan every graph of order n (1..{MAX_BUILTIN_ORDER})")
    scan.add_argument("--max-n", type=int, help="Scan every graph of order 1..max-n")
    scan.add_argument("--file", help="A file of graph6 lines")
    scan.add_argument("--stdin", action="store_true", help="Read graph6 lines from standard input")
    scan.add_argument("--connected", action="store_true", help="Only connected graphs")
    scan.add_argument("--alpha", type=_nonnegative_int, help="Only graphs with this independence number")
    scan.add_argument("--ke-only", action="store_true", help="Only König-Egerváry graphs")
    scan.add_argument(
        "--alpha3-connected",
        action="store_true",
        help="Connected KE graphs with alpha = 3, h >= n/2 and condition (ii)",
    )
    scan.add_argument("--threads", type=_nonnegative_int, help="Worker processes (0 = one per CPU)")
    scan.add_argument("--progress", action="store_true", help="Show a progress bar on stderr")
    _add_common(scan)

    verify = commands.add_parser("verify", help="Run the acceptance suite")
    verify.add_argument(
        "--quick", action="store_true", help=f"Stop the exhaustive scan one order below {MAX_BUILTIN_ORDER}"
    )
    verify.add_argument("--threads", type=_nonnegative_int, help="Worker processes (0 = one per CPU)")
    verify.add_argument("--progress", action="store_true", help="Show a progress bar on stderr")
    _add_common(verify)
    return parser


def _scan_orders(args: argparse.Namespace) -> Optional[List[int]]:
    if args.n is not None and args.max_n is not None:
        raise UsageError("Give either --n or --max-n, not both")
    bound = args.n if args.n is not None else args.max_n
    if bound is None:
        return None
    if not 1 <= bound <= MAX_BUILTIN_ORDER:
        raise UsageError(f"Built-in enumeration supports orders 1..{MAX_BUILTIN_ORDER}, got {bound}")
    return [bound] if args.n is not None else list(range(1, bound + 1))


def parse_args(argv: Sequence[str]) -> CommandPlan:
    """
    Parse command-line arguments into a CommandPlan.

    Args:
        argv: Arguments without the program name

    Returns:
        Validated CommandPlan

    Raises:
        UsageError: for unknown flags, missing or conflicting inputs, and out-of-range orders
    """
    args = build_parser().parse_args(list(argv))
    command = Command(args.command)
    plan = CommandPlan(
        command=command,
        format=OutputFormat(args.format),
        deterministic=args.deterministic,
        budget=args.budget,
        threads=getattr(args, "threads", None),
        progress=getattr(args, "progress", False),
    )

    if command == Command.ANALYZE:
        plan.g6, plan.file, plan.stdin = args.g6, args.file, args.stdin
        plan.family, plan.k = args.family, args.k
    elif command == Command.FAMILY:
        plan.family, plan.k, plan.emit = args.name, args.k, args.emit
    elif command == Command.SCAN:
        plan.file, plan.stdin = args.file, args.stdin
        plan.orders = _scan_orders(args)
        plan.connected, plan.alpha, plan.ke_only = args.connected, args.alpha, args.ke_only
        plan.alpha3_connected = args.alpha3_connected
    else:
        plan.quick = args.quick

    if command in (Command.ANALYZE, Command.SCAN):
        sources = plan.input_sources
        if not sources:
            raise UsageError(f"{command.value} needs an input: one of --g6, --file, --stdin, --family, --n")
        if len(sources) > 1:
            raise UsageError(f"{command.value} takes exactly one input, got {' and '.join(sources)}")
    if command == Command.ANALYZE and plan.k is not None and plan.family is None:
        raise UsageError("--k requires --family")
    return plan
