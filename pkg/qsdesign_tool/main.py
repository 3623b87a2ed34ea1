"""
Main entry point for the qsdesign tool.

This module provides the command-line interface entry point that parses
arguments and dispatches to the appropriate command handlers.
"""

import sys
from typing import List, Optional

from qsdesign.errors import DomainError
from qsdesign_tool.cli import config_from_args, create_parser, parse_args
from qsdesign_tool.commands.catalog_cmd import execute_catalog_command
from qsdesign_tool.commands.params_cmd import execute_params_command
from qsdesign_tool.commands.report_cmd import execute_report_command
from qsdesign_tool.commands.run_all_cmd import execute_run_all_command
from qsdesign_tool.commands.run_cmd import execute_run_command
from qsdesign_tool.commands.xgcd_cmd import execute_xgcd_command
from qsdesign_tool.shared.error import EXIT_ERROR, EXIT_INTERRUPTED, \
    EXIT_USAGE, handle_error


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the qsdesign-tool CLI.

    Parses command-line arguments and executes the appropriate command.

    Args:
        argv: Arguments without the program name; defaults to sys.argv.

    Returns:
        Exit code: 0 if everything was eliminated, 1 if a case survived or
        stayed unresolved, 2 for usage or data errors, 3 for an unexpected
        internal error, 130 on Ctrl+C.
    """
    try:
        args = parse_args(argv)

        if not args.command:
            create_parser().print_help(sys.stderr)
            return EXIT_USAGE

        if args.command == 'catalog':
            return execute_catalog_command(fmt=args.format)

        if args.command == 'params':
            return execute_params_command(
                v=args.v,
                y_values=args.y_values,
                r_divisor=args.rdiv,
                fmt=args.format
            )

        if args.command == 'report':
            return execute_report_command(
                path=args.path,
                case_ids=args.case_ids,
                p=args.p,
                q_max=args.q_max,
                fmt=args.format
            )

        if args.command == 'xgcd':
            return execute_xgcd_command(f_text=args.f, g_text=args.g)

        try:
            config = config_from_args(args)
        except DomainError as e:
            handle_error(str(e))
            return EXIT_USAGE

        if args.command == 'run':
            return execute_run_command(
                case_id=args.case_id,
                config=config,
                fmt=args.format
            )
        elif args.command == 'run-all':
            return execute_run_all_command(
                config=config,
                fmt=args.format,
                output=args.output,
                verbose=args.verbose
            )
        else:
            handle_error(f"Unknown command: {args.command}")
            return EXIT_USAGE

    except SystemExit as e:
        # argparse exits with 2 on usage errors and 0 after --help
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except KeyboardInterrupt:
        print("\nOperation cancelled by user.", file=sys.stderr)
        return EXIT_INTERRUPTED
    except Exception as e:
        handle_error(f"Unexpected error: {str(e)}")
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
