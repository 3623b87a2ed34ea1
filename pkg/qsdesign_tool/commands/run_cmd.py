"""
Run command implementation for the qsdesign tool.

This module implements the 'run' subcommand that runs one case, plus the
special analysis a routed case hands over to.
"""

from qsdesign.errors import CatalogError, DomainError, UnknownCaseError
from qsdesign.report import EliminationReport
from qsdesign.runner import run_one
from qsdesign.sieve import SieveConfig
from qsdesign_tool.shared.error import EXIT_FAILED, EXIT_OK, EXIT_USAGE, \
    handle_error, handle_notice
from qsdesign_tool.shared.formatting import format_report


def execute_run_command(case_id: str, config: SieveConfig,
                        fmt: str = 'table') -> int:
    """
    Execute the run command for a single case.

    Args:
        case_id: The case to run.
        config: Replay settings.
        fmt: Output format, ``table`` or ``jsonl``.

    Returns:
        Exit code: 0 if the case is eliminated, 1 if it survives or stays
        unresolved, 2 for an unknown case or invalid input.
    """
    try:
        report = EliminationReport(run_one(case_id, config))
        head = report.case(case_id)
        if head is not None and head.routed_to:
            handle_notice(f"{case_id} is routed to {head.routed_to}")
            report.extend(run_one(head.routed_to, config))
    except (UnknownCaseError, DomainError, CatalogError) as e:
        handle_error(str(e))
        return EXIT_USAGE

    print(format_report(report, fmt), end='')
    return EXIT_OK if report.all_eliminated else EXIT_FAILED
