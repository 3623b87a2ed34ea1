"""
qsdesign replays, with exact integer and polynomial arithmetic, the
elimination of flag-transitive point-primitive automorphism groups with an
exceptional socle for quasi-symmetric 2-designs with intersection numbers
``0`` and ``2 <= y <= 10``.

Usage example:

>>> from qsdesign import get_case, run_case
>>> entries = run_case(get_case('F4:3D4'))
>>> entries[0].verdict
'eliminated'
"""

from .catalog import all_cases, get_case
from .exactmath import IntPoly, PrimePower, poly_xgcd
from .polyexpr import parse_poly
from .report import EliminationReport, ReportEntry
from .runner import run_all, run_one
from .sieve import DesignParams, SieveConfig, param_search, run_case
from .version import __version__

__all__ = ('get_case', 'all_cases', 'run_case', 'run_one', 'run_all',
           'param_search', 'DesignParams', 'SieveConfig', 'IntPoly',
           'PrimePower', 'poly_xgcd', 'parse_poly', 'EliminationReport',
           'ReportEntry', '__version__')
