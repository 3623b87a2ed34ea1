"""
Formatting utilities for displaying cases, parameters and reports.

This module turns library objects into the text printed by the commands.
Tables are aligned plain text; the ``jsonl`` format prints one JSON object
per line with integers as decimal strings.
"""

import json
from typing import Iterable, List, Sequence, Union

from qsdesign.catalog import ParabolicCase, SubgroupCase
from qsdesign.report import EliminationReport
from qsdesign.sieve import DesignParams

FORMATS = ('table', 'jsonl')

Case = Union[SubgroupCase, ParabolicCase]


def align(rows: Sequence[Sequence[str]]) -> str:
    """
    Align rows of cells into columns.

    Args:
        rows: Rows of equal length; the last column is not padded.

    Returns:
        The aligned text, one line per row.
    """
    if not rows:
        return ''
    widths = [max(len(row[i]) for row in rows)
              for i in range(len(rows[0]) - 1)]
    lines = []
    for row in rows:
        cells = [cell.ljust(width) for cell, width in zip(row, widths)]
        lines.append('  '.join(cells + [row[-1]]).rstrip())
    return '\n'.join(lines) + '\n'


def describe_case(case: Case) -> dict:
    """
    Describe a catalog case as a JSON-ready dictionary.

    Args:
        case: A non-parabolic or parabolic case.

    Returns:
        A dictionary with id, family, subgroup, route, conditions and index.
    """
    if isinstance(case, ParabolicCase):
        index = str(case.index)
        conditions = ''
    elif case.polynomial:
        index = str(case.index)
        if case.root > 1:
            index += ' in s = q^(1/{})'.format(case.root)
        conditions = case.conditions
    else:
        index = ', '.join('q={}: {}'.format(q, v)
                          for q, v in ((q, case.v_at(q))
                                       for q, _ in case.fixed))
        conditions = case.conditions
    return {
        'case_id': case.id,
        'family': case.family,
        'subgroup': case.subgroup,
        'route': case.route,
        'conditions': conditions,
        'index': index,
    }


def format_cases(cases: Iterable[Case], fmt: str = 'table') -> str:
    """
    Format catalog cases for display.

    Args:
        cases: The cases to list.
        fmt: Either ``table`` or ``jsonl``.

    Returns:
        The formatted listing.
    """
    described = [describe_case(case) for case in cases]
    if fmt == 'jsonl':
        return ''.join(json.dumps(d, ensure_ascii=False) + '\n'
                       for d in described)

    rows: List[Sequence[str]] = [('case', 'family', 'subgroup', 'route',
                                  'index')]
    rows += [(d['case_id'], d['family'], d['subgroup'], d['route'],
              d['index']) for d in described]
    return align(rows)


def format_params(params: Iterable[DesignParams], fmt: str = 'table') -> str:
    """
    Format parameter sets, one per line.

    The table form is ``v,b,r,k,lambda,y=Y``.

    Args:
        params: The parameter sets to print.
        fmt: Either ``table`` or ``jsonl``.

    Returns:
        The formatted parameter sets.
    """
    lines = []
    for p in params:
        if fmt == 'jsonl':
            lines.append(json.dumps({'v': str(p.v), 'b': str(p.b),
                                     'r': str(p.r), 'k': str(p.k),
                                     'lambda': str(p.lam), 'y': str(p.y)}))
        else:
            lines.append('{},{},{},{},{},y={}'.format(p.v, p.b, p.r, p.k,
                                                      p.lam, p.y))
    return ''.join(line + '\n' for line in lines)


def format_report(report: EliminationReport, fmt: str = 'table') -> str:
    """
    Format an elimination report.

    Args:
        report: The report to print.
        fmt: Either ``table`` or ``jsonl``. The summary line is part of the
             table only.

    Returns:
        The formatted report.
    """
    if fmt == 'jsonl':
        return report.to_jsonl()
    return report.to_table()
