"""
Run-all command implementation for the qsdesign tool.

This module implements the 'run-all' subcommand: the full replay over the
non-parabolic sweep, the parabolic sweep and the special analyses.
"""

from typing import Optional

from qsdesign.errors import CatalogError, DomainError
from qsdesign.runner import run_all
from qsdesign.sieve import SieveConfig
from qsdesign.storages import JSONLinesStorage
from qsdesign_tool.shared.error import EXIT_FAILED, EXIT_OK, EXIT_USAGE, \
    handle_error, handle_notice
from qsdesign_tool.shared.formatting import format_report


def execute_run_all_command(config: SieveConfig, fmt: str = 'table',
                            output: Optional[str] = None,
                            verbose: bool = False) -> int:
    """
    Execute the full replay.

    Args:
        config: Replay settings, including the number of workers.
        fmt: Output format, ``table`` or ``jsonl``. With ``jsonl`` the
             summary line goes to stderr.
        output: Optional path of a JSON lines file receiving the report.
        verbose: Print a note as each case finishes.

    Returns:
        Exit code: 0 if every case is eliminated, 1 otherwise, 2 for invalid
        input.
    """
    progress = (lambda case_id: handle_notice(f"done {case_id}")) \
        if verbose else None

    try:
        report = run_all(config, progress=progress)
    except (DomainError, CatalogError) as e:
        handle_error(str(e))
        return EXIT_USAGE

    if output is not None:
        try:
            with JSONLinesStorage(output, create_dirs=True) as storage:
                storage.write(report)
        except OSError as e:
            handle_error(f"Cannot write report to {output}: {e}")
            return EXIT_USAGE

    print(format_report(report, fmt), end='')
    if fmt == 'jsonl':
        handle_notice(report.summary_line())

    return EXIT_OK if report.all_eliminated else EXIT_FAILED
