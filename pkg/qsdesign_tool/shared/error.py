"""
Error handling utilities for the qsdesign tool.

This module provides unified functions for reporting errors and notices on
the diagnostic stream, keeping standard output free for reports.
"""

import sys

#: Exit codes shared by every command
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_ERROR = 3
EXIT_INTERRUPTED = 130


def handle_error(msg: str) -> None:
    """
    Handle and display error messages in a consistent format.

    Args:
        msg: Error message string to display.
    """
    print(f"Error: {msg}", file=sys.stderr)


def handle_notice(msg: str) -> None:
    """
    Display a progress message or a note about the input data.

    Args:
        msg: Message string to display.
    """
    print(f"note: {msg}", file=sys.stderr)
