"""
Report command implementation for the qsdesign tool.

This module implements the 'report' subcommand that reads a report stored by
``run-all --output`` and prints a selection of it.
"""

from typing import List, Optional

from qsdesign.queries import ANY_Q, where
from qsdesign.storages import JSONLinesStorage
from qsdesign_tool.shared.error import EXIT_FAILED, EXIT_OK, EXIT_USAGE, \
    handle_error, handle_notice
from qsdesign_tool.shared.formatting import format_report


def execute_report_command(path: str, case_ids: Optional[List[str]] = None,
                           p: Optional[int] = None,
                           q_max: Optional[int] = None,
                           fmt: str = 'table') -> int:
    """
    Execute the report command.

    Args:
        path: JSON lines file written by ``run-all --output``.
        case_ids: Only show these cases.
        p: Only show per-q entries in this characteristic.
        q_max: Only show per-q entries with ``q <= q_max``.
        fmt: Output format, ``table`` or ``jsonl``.

    Returns:
        Exit code: 0 if every selected case is eliminated, 1 otherwise, 2 if
        the file cannot be read.
    """
    try:
        with JSONLinesStorage(path, access_mode='r') as storage:
            report = storage.read()
    except OSError as e:
        handle_error(f"Cannot read report from {path}: {e}")
        return EXIT_USAGE
    except ValueError as e:
        handle_error(f"Malformed report {path}: {e}")
        return EXIT_USAGE

    if report is None:
        handle_error(f"Report {path} is empty")
        return EXIT_USAGE

    field_sizes = ANY_Q
    if p is not None:
        field_sizes = field_sizes & (where('p') == p)
    if q_max is not None:
        field_sizes = field_sizes & (where('q') <= q_max)

    selected = report.select(case_ids or (), field_sizes)
    missing = [case_id for case_id in case_ids or ()
               if selected.case(case_id) is None]
    if missing:
        handle_error(f"Not in the report: {', '.join(missing)}")
        return EXIT_USAGE

    print(format_report(selected, fmt), end='')
    if fmt == 'jsonl':
        handle_notice(selected.summary_line())

    return EXIT_OK if selected.all_eliminated else EXIT_FAILED
