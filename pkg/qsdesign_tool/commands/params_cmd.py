"""
Params command implementation for the qsdesign tool.

This module implements the 'params' subcommand, a bare parameter search for
a given number of points.
"""

from typing import Optional, Sequence

from qsdesign.errors import DomainError
from qsdesign.sieve import DEFAULT_CONFIG, param_search
from qsdesign_tool.shared.error import EXIT_OK, EXIT_USAGE, handle_error, \
    handle_notice
from qsdesign_tool.shared.formatting import format_params


def execute_params_command(v: int, y_values: Optional[Sequence[int]] = None,
                           r_divisor: Optional[int] = None,
                           fmt: str = 'table') -> int:
    """
    Execute the params command.

    Args:
        v: Number of points.
        y_values: Intersection numbers to try; defaults to 2 to 10.
        r_divisor: Optional bound D with r / gcd(r, lambda) | D.
        fmt: Output format, ``table`` or ``jsonl``.

    Returns:
        Exit code: 0 for success (also when nothing is found), 2 for invalid
        input.
    """
    if v < 1:
        handle_error("--v must be positive")
        return EXIT_USAGE
    if r_divisor is not None and r_divisor < 1:
        handle_error("--rdiv must be positive")
        return EXIT_USAGE

    try:
        found = param_search(v, y_values or DEFAULT_CONFIG.y_values,
                             r_divisor=r_divisor)
    except DomainError as e:
        handle_error(str(e))
        return EXIT_USAGE

    if not found:
        handle_notice(f"no parameters for v={v}")
    print(format_params(found, fmt), end='')
    return EXIT_OK
