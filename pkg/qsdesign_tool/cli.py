"""
CLI utilities for the qsdesign tool.

This module provides functions for setting up command-line argument parsing
using argparse and for turning parsed flags into a sieve configuration.
"""

import argparse
from typing import List, Optional

from qsdesign.sieve import SieveConfig

DEFAULTS = SieveConfig()


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--format',
        choices=('table', 'jsonl'),
        default='table',
        help='Output format. Default is an aligned table.'
    )


def _add_y(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--y',
        type=int,
        nargs='+',
        dest='y_values',
        default=None,
        metavar='Y',
        help='Non-zero block intersection numbers to search (default: 2 to 10)'
    )


def _add_sieve_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--qmax',
        type=int,
        dest='q_max',
        default=DEFAULTS.q_max,
        help='Largest q scanned by the generic stages '
             f'(default: {DEFAULTS.q_max})'
    )
    parser.add_argument(
        '--suzuki-qmax',
        type=int,
        dest='suzuki_q_max',
        default=DEFAULTS.suzuki_q_max,
        help='Scan cap of the Suzuki analysis'
    )
    parser.add_argument(
        '--ree-qmax',
        type=int,
        dest='ree_q_max',
        default=DEFAULTS.ree_q_max,
        help='Scan cap of the Ree analysis'
    )
    parser.add_argument(
        '--g2-qmax',
        type=int,
        dest='g2_q_max',
        default=DEFAULTS.g2_q_max,
        help='Scan cap of the G2 analyses'
    )
    _add_y(parser)
    _add_format(parser)


def create_parser() -> argparse.ArgumentParser:
    """
    Create and configure the main argument parser for qsdesign-tool.

    Returns:
        Configured ArgumentParser instance with subcommands.
    """
    parser = argparse.ArgumentParser(
        prog='qsdesign-tool',
        description='Replay the elimination of exceptional groups of Lie type '
                    'acting flag-transitively on quasi-symmetric 2-designs.',
        formatter_class=argparse.RawDescriptionHelpFormatter
    )

    subparsers = parser.add_subparsers(
        dest='command',
        help='Available commands',
        metavar='COMMAND'
    )

    catalog_parser = subparsers.add_parser(
        'catalog',
        help='List every case of the replay',
        description='List the large maximal subgroups and parabolic cases '
                    'together with the route each one takes.'
    )
    _add_format(catalog_parser)

    run_parser = subparsers.add_parser(
        'run',
        help='Run a single case',
        description='Run every stage on one case. Routed cases also run the '
                    'special analysis they hand over to.'
    )
    run_parser.add_argument(
        '--case',
        type=str,
        required=True,
        dest='case_id',
        help='Case id as listed by the catalog command, e.g. F4:3D4, '
             'P:E6:1 or S:SUZUKI'
    )
    _add_sieve_options(run_parser)

    run_all_parser = subparsers.add_parser(
        'run-all',
        help='Replay every case',
        description='Run the non-parabolic sweep, the parabolic sweep and '
                    'the special analyses. Exits with 1 if any case survives '
                    'or stays unresolved.'
    )
    _add_sieve_options(run_all_parser)
    run_all_parser.add_argument(
        '--workers',
        type=int,
        default=DEFAULTS.workers,
        help='Number of worker processes (default: 1)'
    )
    run_all_parser.add_argument(
        '--output',
        type=str,
        default=None,
        help='Also store the report as JSON lines in this file'
    )
    run_all_parser.add_argument(
        '--verbose',
        action='store_true',
        help='Print a note on stderr as each case finishes'
    )

    report_parser = subparsers.add_parser(
        'report',
        help='Show a stored report',
        description='Read a report written by run-all --output and print the '
                    'selected cases. Cases routed to a special analysis keep '
                    'their special entries.'
    )
    report_parser.add_argument(
        'path',
        type=str,
        metavar='FILE',
        help='JSON lines report'
    )
    report_parser.add_argument(
        '--case',
        type=str,
        action='append',
        dest='case_ids',
        default=None,
        help='Only show this case (repeatable)'
    )
    report_parser.add_argument(
        '--p',
        type=int,
        default=None,
        help='Only show per-q entries in this characteristic'
    )
    report_parser.add_argument(
        '--qmax',
        type=int,
        dest='q_max',
        default=None,
        help='Only show per-q entries with q up to this value'
    )
    _add_format(report_parser)

    params_parser = subparsers.add_parser(
        'params',
        help='Search design parameters for a number of points',
        description='List every parameter set (v, b, r, k, lambda, y) of a '
                    'quasi-symmetric design with intersection numbers 0 and y.'
    )
    params_parser.add_argument(
        '--v',
        type=int,
        required=True,
        help='Number of points'
    )
    _add_y(params_parser)
    params_parser.add_argument(
        '--rdiv',
        type=int,
        default=None,
        help='Require r / gcd(r, lambda) to divide this number'
    )
    _add_format(params_parser)

    xgcd_parser = subparsers.add_parser(
        'xgcd',
        help='Compute a Bezout certificate of two polynomials',
        description='Print h = gcd(F, G), the cofactors and the multiplier c '
                    'with gcd(F(q), G(q)) | c * h(q). Polynomials use the '
                    'grammar of expressions like "q^2*(q^2+1)*(q-1)".'
    )
    xgcd_parser.add_argument(
        '--f',
        type=str,
        required=True,
        help='First polynomial'
    )
    xgcd_parser.add_argument(
        '--g',
        type=str,
        required=True,
        help='Second polynomial'
    )

    return parser


def parse_args(args: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Parse command-line arguments.

    Args:
        args: Optional list of arguments to parse. If None, uses sys.argv.

    Returns:
        Parsed arguments as a Namespace object.
    """
    parser = create_parser()
    return parser.parse_args(args)


def config_from_args(args: argparse.Namespace) -> SieveConfig:
    """
    Build the sieve configuration from parsed flags.

    Args:
        args: Parsed arguments of ``run`` or ``run-all``.

    Returns:
        The configuration; flags that are absent keep their defaults.

    Raises:
        DomainError: If the flags describe an invalid configuration.
    """
    options = {}
    for name in ('q_max', 'suzuki_q_max', 'ree_q_max', 'g2_q_max',
                 'workers'):
        value = getattr(args, name, None)
        if value is not None:
            options[name] = value
    if getattr(args, 'y_values', None):
        options['y_values'] = tuple(args.y_values)
    return SieveConfig(**options)
