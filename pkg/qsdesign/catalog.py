"""
The case catalog.

Two kinds of cases exist:

* :class:`SubgroupCase` - a large maximal non-parabolic subgroup, one per
  table row and sign choice. Polynomial rows carry the order of the subgroup
  as an :class:`~qsdesign.groups.OrderExpr`, rows living at a handful of
  fixed field sizes carry plain integers.
* :class:`ParabolicCase` - a maximal parabolic subgroup, one per Dynkin node
  (or node orbit for the twisted families).

The index ``v`` of a polynomial row is ``|X_univ| / |H|`` computed as an
exact polynomial quotient ``P / d``. Rows of the form ``X(q^(1/r))`` are
polynomial in ``s`` with ``q = s^r``.
"""

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import CatalogError, DomainError, UnknownCaseError
from .exactmath import IntPoly, PrimePower, binomial, poly_product, \
    powers_of, prime_power_stream
from .groups import FAMILIES, OrderExpr, linear_order, order_of, \
    orthogonal_order, symplectic_order, universal_order
from .queries import ANY_Q, PowerQuery, QueryLike
from .utils import cached
from .weyl import WEYL, levi_degrees, levi_label, \
    untwisted_parabolic_index

__all__ = ('Index', 'SubgroupCase', 'ParabolicCase', 'nonparabolic_cases',
           'parabolic_cases', 'parabolic_index', 'case_index', 'get_case',
           'all_cases', 'E6_SUBDEGREES')

Q = PowerQuery()

#: Routes a case can take through the sieve
GENERIC, SPECIAL = 'generic', 'special'
P_POWER, RANK3, GCD = 'p-power', 'rank3', 'gcd'

#: Families defined in a single characteristic
_CHARACTERISTIC = {'2B2': 2, '2F4': 2, '2G2': 3}


@dataclass(frozen=True)
class Index:
    """
    ``v = P(s) / d`` with an integer polynomial ``P`` and a positive integer
    ``d``.
    """
    numerator: IntPoly
    denominator: int = 1

    def __call__(self, s: int) -> int:
        value, rest = divmod(self.numerator(s), self.denominator)
        if rest:
            raise CatalogError('index {} is not integral at {}'
                               .format(self, s))
        return value

    @property
    def degree(self) -> int:
        return self.numerator.degree

    def __str__(self):
        if self.denominator == 1:
            return str(self.numerator)
        return '({})/{}'.format(self.numerator, self.denominator)


def _quotient(group: IntPoly, order: OrderExpr) -> Index:
    try:
        numerator = group.exact_div(poly_product(order.factors))
    except DomainError as exc:
        raise CatalogError(str(exc))
    if not isinstance(numerator, IntPoly):
        raise CatalogError('non-integral index {}'.format(numerator))

    d = order.constant
    g = gcd(numerator.content(), d)
    if g > 1:
        numerator = IntPoly(c // g for c in numerator.coeffs)
        d //= g
    return Index(numerator, d)


@dataclass(frozen=True)
class SubgroupCase:
    """
    One row of the table of large maximal non-parabolic subgroups.

    :param id: Stable key such as ``F4:3D4``
    :param family: Tag of the exceptional family
    :param subgroup: Type of the subgroup
    :param conditions: The conditions column as text
    :param constraint: Prime powers ``q`` the row applies to
    :param order: Order of the subgroup in ``s`` (``q = s^root``), or
                  ``None`` for fixed-q rows
    :param fixed: ``(q, |H cap X|)`` pairs of a fixed-q row
    """
    id: str
    family: str
    subgroup: str
    conditions: str
    constraint: QueryLike = field(compare=False)
    order: Optional[OrderExpr] = None
    root: int = 1
    fixed: Tuple[Tuple[int, int], ...] = ()
    route: str = GENERIC
    annotations: Tuple[str, ...] = ()

    @property
    def polynomial(self) -> bool:
        return self.order is not None

    @property
    def index(self) -> Index:
        """
        The index polynomial in ``s`` (polynomial rows only).
        """
        if self.order is None:
            raise DomainError('{} is a fixed-q row'.format(self.id))
        return _case_index(self.id)

    def field_sizes(self, q_max: int) -> List[PrimePower]:
        """
        Every ``q <= q_max`` the row applies to, ascending.
        """
        if not self.polynomial:
            return [PrimePower.of(q) for q, _ in self.fixed if q <= q_max]
        p = _CHARACTERISTIC.get(self.family)
        if p is None:
            return list(prime_power_stream(self.constraint, q_max))
        return list(powers_of(p, q_max, self.constraint))

    def subfield(self, q: PrimePower) -> int:
        return q.root(self.root).q

    def v_at(self, q: Union[int, PrimePower]) -> int:
        pp = q if isinstance(q, PrimePower) else PrimePower.of(q)
        if self.polynomial:
            return self.index(self.subfield(pp))
        return self._fixed_index(pp.q)

    def subgroup_order_at(self, q: Union[int, PrimePower]) -> int:
        """
        A multiple of ``|H cap X|`` at ``q``: the full subgroup order
        expression for polynomial rows, the stored order otherwise.
        """
        pp = q if isinstance(q, PrimePower) else PrimePower.of(q)
        if self.order is not None:
            return self.order(self.subfield(pp))
        return dict(self.fixed)[pp.q]

    def _fixed_index(self, q: int) -> int:
        orders = dict(self.fixed)
        if q not in orders:
            raise DomainError('{} is not defined at q={}'.format(self.id, q))
        value, rest = divmod(order_of(self.family, q), orders[q])
        if rest:
            raise CatalogError('{}: |H| = {} does not divide |X| at q={}'
                               .format(self.id, orders[q], q))
        return value


@dataclass(frozen=True)
class ParabolicCase:
    """
    A maximal parabolic subgroup.

    :param node: Dynkin node (or node orbit for twisted families)
    :param levi: Type of the Levi factor
    :param index: Index polynomial ``v(q)``
    :param order: Order of the parabolic subgroup of ``X_univ``
    :param subdegree: The non-trivial subdegree used by rank-3 cases
    """
    id: str
    family: str
    node: str
    levi: str
    index: IntPoly
    order: OrderExpr
    route: str = P_POWER
    subdegree: Optional[IntPoly] = None
    annotations: Tuple[str, ...] = ()

    @property
    def subgroup(self) -> str:
        return 'P{} ({})'.format(self.node, self.levi)

    def field_sizes(self, q_max: int) -> List[PrimePower]:
        """
        Field sizes in the family's characteristic, ignoring the lower bound
        on ``q`` so that non-simple small groups still show up in reports.
        """
        p = _CHARACTERISTIC.get(self.family)
        if p is None:
            return list(prime_power_stream(ANY_Q, q_max))
        return list(powers_of(p, q_max, Q.f.odd()))

    def v_at(self, q: Union[int, PrimePower]) -> int:
        return self.index(int(q))


# --- Non-parabolic rows ------------------------------------------------------

def _q(*factors: IntPoly, constant: int = 1) -> OrderExpr:
    return OrderExpr(constant, tuple(factors))


def _qexp(n: int) -> IntPoly:
    return IntPoly.monomial(n)


def _sl2() -> OrderExpr:
    return linear_order(2)


def _row(family: str, key: str, subgroup: str, conditions: str,
         order: OrderExpr, constraint: QueryLike = ANY_Q, root: int = 1,
         route: str = GENERIC, annotations: Tuple[str, ...] = ()):
    full = FAMILIES[family].constraint & constraint
    if root > 1:
        full = full & Q.f.divisible_by(root)
    return SubgroupCase(id='{}:{}'.format(family, key), family=family,
                        subgroup=subgroup, conditions=conditions,
                        constraint=full, order=order, root=root, route=route,
                        annotations=annotations)


def _subfield(family: str, sub: str, r: int, constraint: QueryLike = ANY_Q,
              conditions: str = ''):
    label = '{}(q^1/{})'.format(sub, r)
    return _row(family, label, label, conditions or 'r={}'.format(r),
                universal_order(sub), constraint, root=r)


def _fixed(family: str, key: str, subgroup: str, orders: Dict[int, int],
           annotations: Tuple[str, ...] = ()):
    qs = sorted(orders)
    return SubgroupCase(
        id='{}:{}'.format(family, key), family=family, subgroup=subgroup,
        conditions='q=' + ','.join(str(q) for q in qs),
        constraint=Q.q.one_of(qs), fixed=tuple(sorted(orders.items())),
        annotations=annotations)


def _suzuki_rows() -> List[SubgroupCase]:
    return [
        _fixed('2B2', 'C4', '(q+sqrt(2q)+1):4', {8: 52, 32: 164}),
        _subfield('2B2', '2B2', 3, Q.q > 8, 'q>8, 3 | f'),
    ]


def _ree_rows() -> List[SubgroupCase]:
    return [
        _row('2G2', 'A1', 'A1(q)', '', _q(_qexp(1), binomial(2))),
        _subfield('2G2', '2G2', 3, conditions='3 | f'),
    ]


def _triality_rows() -> List[SubgroupCase]:
    rows = [
        _row('3D4', 'A1A1', 'A1(q^3)A1(q)', '',
             linear_order(2).compose_power(3) * _sl2()),
        _row('3D4', 'G2', 'G2(q)', '', universal_order('G2')),
        _subfield('3D4', '3D4', 2, Q.f.even(), 'q square'),
        _fixed('3D4', '7^2:SL2(3)', '7^2:SL(2,3)', {2: 1176}),
    ]
    for sign, eps in (('+', 1), ('-', -1)):
        cyclic = IntPoly([1, eps, 1])
        rows.append(_row('3D4', 'A2' + sign,
                         '(q^2{}q+1)A2{}(q)'.format(sign, sign), 'eps=' + sign,
                         _q(cyclic) * linear_order(3, eps).scaled(2)))
    return rows


def _large_ree_rows() -> List[SubgroupCase]:
    suzuki = universal_order('2B2')
    su3 = 2 * linear_order(3, -1)(8)
    return [
        _row('2F4', '2B2wr2', '2B2(q) wr 2', 'q>=8',
             (suzuki * suzuki).scaled(2), Q.q >= 8),
        _row('2F4', 'B2', 'B2(q):2', 'q>=8',
             symplectic_order(2).scaled(2), Q.q >= 8),
        _subfield('2F4', '2F4', 3, Q.q >= 8, 'q>=8, 3 | f'),
        _fixed('2F4', 'SU3', 'SU(3,q):2', {8: su3}),
        _fixed('2F4', 'PGU3', 'PGU(3,q):2', {8: su3}),
        _fixed('2F4', 'L3(3)', 'A2(3):2', {2: 11232}),
        _fixed('2F4', 'L2(25)', 'A1(25)', {2: 7800}),
        _fixed('2F4', 'A6.2^2', 'A6.2^2', {2: 1440}),
        _fixed('2F4', '5^2:4A4', '5^2:4A4', {2: 1200}),
    ]


def _g2_rows() -> List[SubgroupCase]:
    rows = []
    for sign, eps in (('+', 1), ('-', -1)):
        rows.append(_row('G2', 'A2' + sign, 'A2{}(q)'.format(sign),
                         'eps=' + sign, linear_order(3, eps).scaled(2),
                         route=SPECIAL))
    rows += [
        _row('G2', 'A1A1', 'A1(q)^2', '', _sl2() * _sl2()),
        _subfield('G2', 'G2', 2, Q.f.even()),
        _subfield('G2', 'G2', 3),
        _row('G2', '2G2', '2G2(q)', 'q=3^a, a odd',
             universal_order('2G2'), (Q.p == 3) & Q.f.odd()),
        _fixed('G2', 'G2(2)', 'G2(2)', {5: 12096, 7: 12096}),
        _fixed('G2', 'L2(13)', 'A1(13)', {4: 1092}),
        _fixed('G2', 'J2', 'J2', {4: 604800}),
        _fixed('G2', 'J1', 'J1', {11: 175560}),
        _fixed('G2', '2^3.L3(2)', '2^3.A2(2)', {3: 1344, 5: 1344},
               ('not large at q=5: 1344^3 < |G2(5)|',)),
    ]
    return rows


def _f4_rows() -> List[SubgroupCase]:
    sp4 = symplectic_order(2)
    return [
        _row('F4', 'B4', 'B4(q)', '', symplectic_order(4)),
        _row('F4', 'D4', 'D4(q)', '', orthogonal_order(4).scaled(6)),
        _row('F4', '3D4', '3D4(q)', '', universal_order('3D4').scaled(3)),
        _subfield('F4', 'F4', 2, Q.f.even()),
        _subfield('F4', 'F4', 3),
        _row('F4', 'A1C3', 'A1(q)C3(q)', 'p!=2',
             _sl2() * symplectic_order(3), Q.p != 2),
        _row('F4', 'C4', 'C4(q)', 'p=2', symplectic_order(4), Q.p == 2),
        _row('F4', 'C2(q^2)', 'C2(q^2)', 'p=2',
             sp4.compose_power(2).scaled(2), Q.p == 2),
        _row('F4', 'C2C2', 'C2(q)^2', 'p=2', (sp4 * sp4).scaled(2),
             Q.p == 2),
        _row('F4', '2F4', '2F4(q)', 'q=2^(2n+1)>=2',
             universal_order('2F4'), (Q.p == 2) & Q.f.odd()),
        _fixed('F4', '3D4(2)', '3D4(2)', {3: 634023936}),
        _fixed('F4', 'A9', 'A9', {2: 181440}),
        _fixed('F4', 'A10', 'A10', {2: 1814400}),
        _fixed('F4', 'L4(3)', 'A3(3)', {2: 6065280}),
        _fixed('F4', 'J2', 'J2', {2: 604800}),
        _fixed('F4', 'S6wrS2', 'S6 wr S2', {2: 1036800}),
        _row('F4', 'A1G2', 'A1(q)G2(q)', 'q>3 odd',
             _sl2() * universal_order('G2'), (Q.p != 2) & (Q.q > 3),
             annotations=('not large: |H| has degree 17 against 52 for '
                          '|X|, so (|H||Out|)^3 < |X| at every scanned q',)),
    ]


def _e6_rows() -> List[SubgroupCase]:
    rows = []
    for tag, eps in (('E6', 1), ('2E6', -1)):
        sign = '+' if eps == 1 else '-'
        rows += [
            _row(tag, 'A1A5', 'A1(q)A5{}(q)'.format(sign), '',
                 _sl2() * linear_order(6, eps)),
            _row(tag, 'F4', 'F4(q)', '', universal_order('F4')),
            _row(tag, 'C4', 'C4(q)', 'p!=2', symplectic_order(4), Q.p != 2),
            _subfield(tag, tag, 3),
            _row(tag, 'D4T', '(q{}1)^2.D4(q)'.format('-' if eps == 1 else '+'),
                 '(eps,q)!=(+,2)',
                 _q(binomial(1, eps), binomial(1, eps))
                 * orthogonal_order(4).scaled(6),
                 ~(Q.q == 2) if eps == 1 else ANY_Q),
            _row(tag, '3D4T', '(q^2{}q+1).3D4(q)'.format(sign),
                 '(eps,q)!=(-,2)',
                 _q(IntPoly([1, eps, 1])) * universal_order('3D4').scaled(3),
                 ~(Q.q == 2) if eps == -1 else ANY_Q),
        ]
    rows += [
        _row('2E6', 'D5T', '(q+1)D5-(q)', 'eps=-',
             _q(binomial(1, -1)) * orthogonal_order(5, -1)),
        _subfield('E6', 'E6', 2, Q.f.even(), 'eps=+'),
        _subfield('E6', '2E6', 2, Q.f.even(), 'eps=+'),
        _fixed('2E6', 'J3', 'J3', {2: 50232960}),
        _fixed('2E6', 'A12', 'A12', {2: 239500800}),
        _fixed('2E6', 'O7(3)', 'B3(3)', {2: 4585351680}),
        _fixed('2E6', 'Fi22', 'Fi22', {2: 64561751654400}),
    ]
    return rows


def _e7_rows() -> List[SubgroupCase]:
    rows = []
    for sign, eps in (('+', 1), ('-', -1)):
        rows += [
            _row('E7', 'E6T' + sign, '(q{}1)E6{}(q)'.format(
                '-' if eps == 1 else '+', sign), 'eps=' + sign,
                _q(binomial(1, eps))
                * universal_order('E6' + sign).scaled(2)),
            _row('E7', 'A7' + sign, 'A7{}(q)'.format(sign), 'eps=' + sign,
                 linear_order(8, eps).scaled(2)),
        ]
    rows += [
        _row('E7', 'A1D6', 'A1(q)D6(q)', '', _sl2() * orthogonal_order(6)),
        _row('E7', 'A1F4', 'A1(q)F4(q)', '', _sl2() * universal_order('F4')),
        _subfield('E7', 'E7', 2, Q.f.even()),
        _subfield('E7', 'E7', 3),
        _fixed('E7', 'Fi22', 'Fi22', {2: 64561751654400}),
    ]
    return rows


def _e8_rows() -> List[SubgroupCase]:
    rows = [
        _row('E8', 'A1E7', 'A1(q)E7(q)', '', _sl2() * universal_order('E7')),
        _row('E8', 'D8', 'D8(q)', '', orthogonal_order(8)),
        _subfield('E8', 'E8', 2, Q.f.even()),
        _subfield('E8', 'E8', 3),
    ]
    for sign, eps in (('+', 1), ('-', -1)):
        rows.append(_row('E8', 'A2E6' + sign,
                         'A2{0}(q)E6{0}(q)'.format(sign), 'eps=' + sign,
                         (linear_order(3, eps)
                          * universal_order('E6' + sign)).scaled(2)))
    return rows


@cached(capacity=1)
def _nonparabolic() -> Tuple[SubgroupCase, ...]:
    rows = (_suzuki_rows() + _ree_rows() + _triality_rows()
            + _large_ree_rows() + _g2_rows() + _f4_rows() + _e6_rows()
            + _e7_rows() + _e8_rows())
    return tuple(sorted(rows, key=lambda case: case.id))


def nonparabolic_cases() -> List[SubgroupCase]:
    """
    Every large maximal non-parabolic case, sorted by id.
    """
    return list(_nonparabolic())


@cached(capacity=None)
def _case_index(case_id: str) -> Index:
    case = get_case(case_id)
    assert isinstance(case, SubgroupCase) and case.order is not None
    group = universal_order(case.family).poly().compose_power(case.root)
    return _quotient(group, case.order)


def case_index(case: SubgroupCase) -> Union[Index, Dict[int, int]]:
    """
    The index of a row: an :class:`Index` in ``s`` for polynomial rows, a
    mapping ``q -> v`` for fixed-q rows.

    :raises CatalogError: if an index is not integral
    """
    if case.polynomial:
        return case.index
    return {q: case.v_at(q) for q, _ in case.fixed}


# --- Parabolic subgroups -----------------------------------------------------

#: Positive root counts of the untwisted families
_POSITIVE_ROOTS = {'G2': 6, 'F4': 24, 'E6': 36, 'E7': 63, 'E8': 120}

#: Twisted families: node orbit -> (Levi type, cyclotomic factors
#: ``(d, eps)`` of the Levi order beyond the power of q)
_TWISTED: Dict[str, Dict[str, Tuple[str, Sequence[Tuple[int, int]]]]] = {
    '2B2': {'': ('T', [(1, 1)])},
    '2G2': {'': ('T', [(1, 1)])},
    '3D4': {'2': ('A1(q^3)', [(6, 1), (1, 1)]),
            '134': ('A1(q)', [(2, 1), (3, 1)])},
    '2F4': {'14': ('2B2(q)', [(2, -1), (1, 1), (1, 1)]),
            '23': ('A1(q)', [(2, 1), (1, 1)])},
    '2E6': {'16': ('2D4(q)', [(2, 1), (4, 1), (6, 1), (4, -1), (1, 1),
                              (1, -1)]),
            '35': ('A1(q^2)A2(q)', [(4, 1), (2, 1), (3, 1), (1, 1),
                                    (1, -1)]),
            '2': ('2A5(q)', [(2, 1), (3, -1), (4, 1), (5, -1), (6, 1),
                             (1, 1)]),
            '4': ('A2(q^2)A1(q)', [(4, 1), (6, 1), (2, 1), (1, 1)])},
}

#: Non-trivial subdegrees of E6 on the cosets of P1
E6_SUBDEGREES = (
    (IntPoly.monomial(1) * binomial(8) * binomial(3, -1))
    .exact_div(binomial(1)),
    (IntPoly.monomial(8) * binomial(5) * binomial(4, -1))
    .exact_div(binomial(1)),
)

_E6_INDEX_NOTE = ('index (q^8+q^4+1)(q^9-1)/(q-1); the printed form with '
                  'denominator (q^8-1) does not satisfy 1+d1+d2=v')
_E6_GRAPH_NOTE = ('p-power subdegree taken from the graph-automorphism '
                  'case; the case without a graph automorphism is not '
                  'covered by the published argument')


def parabolic_index(family: str, node: Union[int, str] = '') -> IntPoly:
    """
    Index polynomial of the maximal parabolic at ``node``.

    Untwisted families use Bourbaki node numbers; twisted families use node
    orbits: ``2`` and ``134`` for 3D4, ``14`` and ``23`` for 2F4, ``16``,
    ``35``, ``2`` and ``4`` for 2E6 and the empty string for 2B2 and 2G2.

    :raises DomainError: for an unknown family or node
    :raises CatalogError: if the Levi quotient is not exact
    """
    if family in WEYL:
        try:
            number = int(node)
        except ValueError:
            raise DomainError('{} has no node {!r}'.format(family, node))
        return untwisted_parabolic_index(family, number)

    order = universal_order(family)
    parabolic = _twisted_parabolic_order(family, str(node))
    try:
        return order.poly().exact_div(parabolic.poly()).to_int()
    except DomainError:
        raise CatalogError('inexact parabolic quotient for {} {}'
                           .format(family, node))


def _twisted_parabolic_order(family: str, node: str) -> OrderExpr:
    nodes = _TWISTED.get(family)
    if nodes is None:
        raise DomainError('unknown family {!r}'.format(family))
    if node not in nodes:
        raise DomainError('{} has no parabolic {!r}'.format(family, node))
    qpart = universal_order(family).factors[0]
    _, terms = nodes[node]
    return OrderExpr(1, (qpart,) + tuple(binomial(d, e) for d, e in terms))


def _untwisted_order(family: str, node: int) -> OrderExpr:
    factors = [IntPoly.monomial(_POSITIVE_ROOTS[family]), binomial(1)]
    factors += [binomial(e) for e in levi_degrees(family, node)]
    return OrderExpr(1, tuple(factors))


def _parabolic_id(family: str, node: str) -> str:
    return 'P:{}:{}'.format(family, node) if node else 'P:{}'.format(family)


@cached(capacity=1)
def _parabolic() -> Tuple[ParabolicCase, ...]:
    cases = []
    for family, data in WEYL.items():
        for node in data.nodes:
            route, subdegree, notes = P_POWER, None, ()
            if family == 'E6' and node in (1, 6):
                route, subdegree, notes = RANK3, E6_SUBDEGREES[0], \
                    (_E6_INDEX_NOTE,)
            elif family == 'E6' and node in (3, 5):
                route = GCD
            elif family == 'E6':
                notes = (_E6_GRAPH_NOTE,)
            cases.append(ParabolicCase(
                id=_parabolic_id(family, str(node)), family=family,
                node=str(node), levi=levi_label(family, node),
                index=untwisted_parabolic_index(family, node),
                order=_untwisted_order(family, node), route=route,
                subdegree=subdegree, annotations=notes))

    for family, nodes in _TWISTED.items():
        for node, (levi, _) in nodes.items():
            route = SPECIAL if family in ('2B2', '2G2') else P_POWER
            cases.append(ParabolicCase(
                id=_parabolic_id(family, node), family=family, node=node,
                levi=levi, index=parabolic_index(family, node),
                order=_twisted_parabolic_order(family, node), route=route))

    return tuple(sorted(cases, key=lambda case: case.id))


def parabolic_cases() -> List[ParabolicCase]:
    """
    Every maximal parabolic case, sorted by id.
    """
    return list(_parabolic())


def all_cases() -> List[Union[SubgroupCase, ParabolicCase]]:
    return sorted(nonparabolic_cases() + parabolic_cases(),
                  key=lambda case: case.id)


def get_case(case_id: str) -> Union[SubgroupCase, ParabolicCase]:
    """
    :raises UnknownCaseError: if no case has this id
    """
    for case in _nonparabolic() + _parabolic():
        if case.id == case_id:
            return case
    raise UnknownCaseError(case_id)
