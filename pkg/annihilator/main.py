"""
Command-line entry point for annihilator.
Loads .env, configures logging on stderr and dispatches to the CLI commands.
"""
from dotenv import load_dotenv

# Load .env file before settings are read
load_dotenv()

import logging
import sys
from typing import Optional, Sequence

from annihilator.cli.commands import EXIT_USAGE, run
from annihilator.cli.parser import parse_args
from annihilator.config import get_settings
from annihilator.domain.errors import UsageError

logger = logging.getLogger(__name__)


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the CLI.

    Args:
        argv: Arguments without the program name (sys.argv[1:] when omitted)

    Returns:
        Process exit code
    """
    settings = get_settings()
    configure_logging(settings.LOG_LEVEL)
    try:
        plan = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE
    result = run(plan)
    if result.output:
        sys.stdout.write(result.output)
    if result.error:
        sys.stderr.write(result.error)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
