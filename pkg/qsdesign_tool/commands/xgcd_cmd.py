"""
Xgcd command implementation for the qsdesign tool.

This module implements the 'xgcd' subcommand for inspecting the Bezout
certificates the bound stage is built on.
"""

from qsdesign.errors import DomainError, PolySyntaxError
from qsdesign.exactmath import gcd_bound_multiplier, poly_xgcd
from qsdesign.polyexpr import parse_poly, print_poly
from qsdesign_tool.shared.error import EXIT_OK, EXIT_USAGE, handle_error


def execute_xgcd_command(f_text: str, g_text: str) -> int:
    """
    Execute the xgcd command.

    Args:
        f_text: The first polynomial as text.
        g_text: The second polynomial as text.

    Returns:
        Exit code: 0 for success, 2 for a syntax error or two zero
        polynomials.
    """
    try:
        F = parse_poly(f_text)
        G = parse_poly(g_text)
    except PolySyntaxError as e:
        handle_error(f"Invalid polynomial: {e}")
        return EXIT_USAGE

    try:
        cert = poly_xgcd(F, G)
        c, h_int = gcd_bound_multiplier(F, G)
    except DomainError as e:
        handle_error(str(e))
        return EXIT_USAGE

    print(f"h = {print_poly(cert.h)}")
    print(f"s = {print_poly(cert.s)}")
    print(f"t = {print_poly(cert.t)}")
    print(f"c = {c}")
    print(f"gcd(F(q), G(q)) divides {c}*({print_poly(h_int)})")
    return EXIT_OK
