"""
Catalog command implementation for the qsdesign tool.

This module implements the 'catalog' subcommand that lists every case of the
replay together with its index and route.
"""

from qsdesign.catalog import all_cases
from qsdesign.errors import CatalogError
from qsdesign_tool.shared.error import EXIT_OK, EXIT_USAGE, handle_error
from qsdesign_tool.shared.formatting import format_cases


def execute_catalog_command(fmt: str = 'table') -> int:
    """
    Execute the catalog command.

    Args:
        fmt: Output format, ``table`` or ``jsonl``.

    Returns:
        Exit code: 0 for success, 2 if the catalog is inconsistent.
    """
    try:
        print(format_cases(all_cases(), fmt), end='')
    except CatalogError as e:
        handle_error(f"Inconsistent catalog: {e}")
        return EXIT_USAGE
    return EXIT_OK
