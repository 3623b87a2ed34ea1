"""
Contains the :class:`~qsdesign.report.EliminationReport`, the ordered record
of what every stage concluded about every case.

A report is a list of :class:`ReportEntry` values. Each case contributes
exactly one *case-level* entry (``q is None``) carrying the overall verdict
and, for polynomial cases, the symbolic certificate. Per-``q`` entries follow
it and record the stage that decided that field size.

Entries are kept sorted by ``(case_id, q, stage)`` so that the serialized
form does not depend on the order in which cases were run.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from .exactmath import PrimePower
from .queries import QueryLike

__all__ = ('ReportEntry', 'EliminationReport', 'ELIMINATED', 'SURVIVOR',
           'UNRESOLVED', 'ROUTED', 'STAGES', 'FIELDS')

ELIMINATED = 'eliminated'
SURVIVOR = 'survivor'
UNRESOLVED = 'unresolved'
ROUTED = 'routed-to-special'

VERDICTS = (ELIMINATED, SURVIVOR, UNRESOLVED, ROUTED)

#: Stage tags in pipeline order; the order breaks ties when sorting.
STAGES = ('symbolic-bound', 'p-part', 'exact-gcd', 'param-search', 'special')

#: jsonl key order.
FIELDS = ('case_id', 'family', 'subgroup', 'stage', 'q', 'h', 'c', 'a',
          'params', 'verdict', 'annotations')

PARAM_KEYS = ('v', 'b', 'r', 'k', 'lambda', 'y')

ROUTE_PREFIX = 'routed to '

ParamTuple = Tuple[int, ...]


def _int_or_none(value: Any) -> Optional[int]:
    return None if value is None else int(value)


def _str_or_none(value: Any) -> Optional[str]:
    return None if value is None else str(value)


@dataclass(frozen=True)
class ReportEntry:
    """
    One line of an elimination report.

    :param case_id: The catalog id of the case (``F4:3D4``, ``P:E6:1``, ...).
    :param stage: The deciding stage, one of :data:`STAGES`.
    :param verdict: One of ``eliminated``, ``survivor``, ``unresolved`` and
                    ``routed-to-special``.
    :param q: The field size, or ``None`` for the case-level entry.
    :param h: The certificate polynomial in canonical text form.
    :param c: The certificate constant.
    :param a: The exact gcd value of the exact or p-part stage.
    :param params: Surviving parameter tuples ``(v, b, r, k, lambda, y)``.
    :param annotations: Free-form notes, e.g. discrepancy flags.
    """

    case_id: str
    family: str
    subgroup: str
    stage: str
    verdict: str
    q: Optional[int] = None
    h: Optional[str] = None
    c: Optional[int] = None
    a: Optional[int] = None
    params: Tuple[ParamTuple, ...] = ()
    annotations: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.stage not in STAGES:
            raise ValueError('unknown stage: {}'.format(self.stage))
        if self.verdict not in VERDICTS:
            raise ValueError('unknown verdict: {}'.format(self.verdict))
        params = tuple(tuple(int(x) for x in p) for p in self.params)
        object.__setattr__(self, 'params', params)
        object.__setattr__(self, 'annotations', tuple(self.annotations))

    @property
    def is_case_level(self) -> bool:
        return self.q is None

    @property
    def sort_key(self) -> Tuple[str, int, int]:
        return (self.case_id, -1 if self.q is None else self.q,
                STAGES.index(self.stage))

    @property
    def routed_to(self) -> Optional[str]:
        """
        The special case id this entry hands over to, if any.
        """
        for note in self.annotations:
            if note.startswith(ROUTE_PREFIX):
                return note[len(ROUTE_PREFIX):]
        return None

    def to_json(self) -> Dict[str, Any]:
        """
        Convert to a JSON object with integers as decimal strings.
        """
        return {
            'case_id': self.case_id,
            'family': self.family,
            'subgroup': self.subgroup,
            'stage': self.stage,
            'q': _str_or_none(self.q),
            'h': self.h,
            'c': _str_or_none(self.c),
            'a': _str_or_none(self.a),
            'params': [{key: str(value) for key, value in zip(PARAM_KEYS, p)}
                       for p in self.params],
            'verdict': self.verdict,
            'annotations': list(self.annotations),
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'ReportEntry':
        missing = [key for key in FIELDS if key not in data]
        if missing:
            raise ValueError(
                'report entry lacks {}'.format(', '.join(missing)))

        params = tuple(tuple(int(p[key]) for key in PARAM_KEYS)
                       for p in data['params'])

        return cls(
            case_id=data['case_id'],
            family=data['family'],
            subgroup=data['subgroup'],
            stage=data['stage'],
            verdict=data['verdict'],
            q=_int_or_none(data['q']),
            h=data['h'],
            c=_int_or_none(data['c']),
            a=_int_or_none(data['a']),
            params=params,
            annotations=tuple(data['annotations']),
        )

    def detail(self) -> str:
        """
        A short human summary of the certificate payload.
        """
        parts = []
        if self.h is not None:
            parts.append('h={}'.format(self.h))
        if self.c is not None:
            parts.append('c={}'.format(self.c))
        if self.a is not None:
            parts.append('a={}'.format(self.a))
        for p in self.params:
            parts.append('({})'.format(','.join(str(x) for x in p)))
        return ' '.join(parts)


@dataclass
class EliminationReport:
    """
    A deterministically ordered collection of report entries.
    """

    entries: List[ReportEntry] = field(default_factory=list)

    def __post_init__(self):
        self.entries = sorted(self.entries, key=lambda e: e.sort_key)

    def extend(self, entries: Iterable[ReportEntry]) -> None:
        self.entries = sorted(list(self.entries) + list(entries),
                              key=lambda e: e.sort_key)

    def __iter__(self) -> Iterator[ReportEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def cases(self) -> List[ReportEntry]:
        """
        Get the case-level entries.
        """
        return [e for e in self.entries if e.is_case_level]

    def case(self, case_id: str) -> Optional[ReportEntry]:
        for entry in self.entries:
            if entry.case_id == case_id and entry.is_case_level:
                return entry
        return None

    def for_case(self, case_id: str) -> List[ReportEntry]:
        return [e for e in self.entries if e.case_id == case_id]

    def select(self, case_ids: Iterable[str] = (),
               field_sizes: Optional[QueryLike] = None) -> 'EliminationReport':
        """
        A sub-report.

        Case-level entries are kept whenever their case is, together with the
        special cases they are routed to, so verdicts still resolve.

        :param case_ids: Keep only these cases (all cases if empty).
        :param field_sizes: Keep only per-q entries whose field size matches.
        """
        wanted = set(case_ids)
        if wanted:
            wanted.update(e.routed_to for e in self.cases()
                          if e.case_id in wanted and e.routed_to)

        entries = []
        for e in self.entries:
            if wanted and e.case_id not in wanted:
                continue
            if e.q is not None and field_sizes is not None \
                    and not field_sizes(PrimePower.of(e.q)):
                continue
            entries.append(e)
        return EliminationReport(entries)

    def final_verdict(self, entry: ReportEntry) -> str:
        """
        Resolve a routed verdict through the special entry it points at.

        A routed case counts as eliminated once its special case is, and as
        unresolved while the special case is missing from the report.
        """
        if entry.verdict != ROUTED:
            return entry.verdict

        target = entry.routed_to
        special = self.case(target) if target else None
        if special is None:
            return UNRESOLVED
        return special.verdict

    def summary(self) -> Dict[str, int]:
        counts = {'cases': 0, ELIMINATED: 0, SURVIVOR: 0, UNRESOLVED: 0}
        for entry in self.cases():
            counts['cases'] += 1
            counts[self.final_verdict(entry)] += 1
        return counts

    def summary_line(self) -> str:
        counts = self.summary()
        line = 'cases: {}, eliminated: {}, survivors: {}'.format(
            counts['cases'], counts[ELIMINATED], counts[SURVIVOR])
        if counts[UNRESOLVED]:
            line += ', unresolved: {}'.format(counts[UNRESOLVED])
        return line

    @property
    def all_eliminated(self) -> bool:
        counts = self.summary()
        return counts[SURVIVOR] == 0 and counts[UNRESOLVED] == 0

    def to_jsonl(self) -> str:
        lines = [json.dumps(e.to_json(), ensure_ascii=False)
                 for e in self.entries]
        return ''.join(line + '\n' for line in lines)

    @classmethod
    def from_jsonl(cls, text: str) -> 'EliminationReport':
        entries = []
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as e:
                raise ValueError('line {}: {}'.format(number, e.msg))
            entries.append(ReportEntry.from_json(data))
        return cls(entries)

    def to_table(self) -> str:
        """
        Render an aligned table followed by the summary line.
        """
        header = ('case', 'q', 'stage', 'verdict', 'detail')
        rows = [header]
        for e in self.entries:
            rows.append((e.case_id, '-' if e.q is None else str(e.q),
                         e.stage, e.verdict, e.detail()))

        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        lines = []
        for row in rows:
            cells = [cell.ljust(width) for cell, width in zip(row, widths)]
            lines.append('  '.join(cells + [row[4]]).rstrip())

        lines.append('')
        lines.append(self.summary_line())
        return '\n'.join(lines) + '\n'
