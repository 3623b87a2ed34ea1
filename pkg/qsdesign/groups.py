"""
Orders, centers and outer automorphism groups of finite groups of Lie type.

Every order is kept as an :class:`OrderExpr`, a constant times a product of
integer polynomials in ``q``. Keeping the factors apart lets the sieve bound
``gcd(v - 1, |H|)`` factor by factor.
"""

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Dict, Iterable, Tuple

from .errors import DomainError
from .exactmath import IntPoly, PrimePower, binomial, poly_product
from .queries import ANY_Q, PowerQuery, QueryLike

__all__ = ('OrderExpr', 'GroupFamily', 'FAMILIES', 'EXCEPTIONAL_TAGS',
           'universal_order', 'order_of', 'center_order', 'out_order',
           'valid_q', 'family')

Q = PowerQuery()

#: q^8 + q^4 + 1, the factor (q^12 - 1) / (q^4 - 1) of the triality groups
PHI3_PHI6_Q4 = IntPoly([1, 0, 0, 0, 1, 0, 0, 0, 1])

#: Order of the Tits group, the derived subgroup of 2F4(2)
TITS_ORDER = 17971200


@dataclass(frozen=True)
class OrderExpr:
    """
    ``constant * prod(factors)`` as a function of ``q``.
    """
    constant: int = 1
    factors: Tuple[IntPoly, ...] = ()

    def poly(self) -> IntPoly:
        return poly_product(self.factors) * self.constant  # type: ignore

    def __call__(self, q: int) -> int:
        value = self.constant
        for factor in self.factors:
            value *= factor(q)
        return value

    def __mul__(self, other: 'OrderExpr') -> 'OrderExpr':
        return OrderExpr(self.constant * other.constant,
                         self.factors + other.factors)

    def scaled(self, c: int) -> 'OrderExpr':
        return OrderExpr(self.constant * c, self.factors)

    def compose_power(self, r: int) -> 'OrderExpr':
        """
        Substitute ``q -> q^r`` in every factor.
        """
        return OrderExpr(self.constant,
                         tuple(f.compose_power(r) for f in self.factors))

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self.factors)

    def __str__(self):
        parts = ['({})'.format(f) for f in self.factors]
        if self.constant != 1 or not parts:
            parts.insert(0, str(self.constant))
        return '*'.join(parts)


def _lie(qexp: int, terms: Iterable[Tuple[int, int]],
         extra: Iterable[IntPoly] = ()) -> OrderExpr:
    factors = [IntPoly.monomial(qexp)] if qexp else []
    factors += [binomial(d, eps) for d, eps in terms]
    factors += list(extra)
    return OrderExpr(1, tuple(factors))


def _untwisted(qexp: int, degrees: Iterable[int]) -> OrderExpr:
    return _lie(qexp, [(d, 1) for d in degrees])


def linear_order(n: int, eps: int = 1) -> OrderExpr:
    """
    ``|SL_n(q)|`` for ``eps = 1`` and ``|SU_n(q)|`` for ``eps = -1``.
    """
    return _lie(n * (n - 1) // 2, [(i, eps ** i) for i in range(2, n + 1)])


def symplectic_order(m: int) -> OrderExpr:
    """
    ``|Sp_2m(q)|``, which is also the order of ``Spin_(2m+1)(q)``.
    """
    return _untwisted(m * m, [2 * i for i in range(1, m + 1)])


def orthogonal_order(m: int, eps: int = 1) -> OrderExpr:
    """
    ``|Spin^eps_2m(q)|``.
    """
    return _lie(m * (m - 1),
                [(m, eps)] + [(2 * i, 1) for i in range(1, m)])


_CLASSICAL = re.compile(r'^([ABCD])(\d+)([+-]?)$')

_EXCEPTIONAL_ORDERS: Dict[str, OrderExpr] = {
    '2B2': _lie(2, [(2, -1), (1, 1)]),
    '2G2': _lie(3, [(3, -1), (1, 1)]),
    '3D4': _lie(12, [(6, 1), (2, 1)], [PHI3_PHI6_Q4]),
    '2F4': _lie(12, [(6, -1), (4, 1), (3, -1), (1, 1)]),
    'G2': _untwisted(6, (6, 2)),
    'F4': _untwisted(24, (2, 6, 8, 12)),
    'E6': _untwisted(36, (2, 5, 6, 8, 9, 12)),
    '2E6': _lie(36, [(2, 1), (5, -1), (6, 1), (8, 1), (9, -1), (12, 1)]),
    'E7': _untwisted(63, (2, 6, 8, 10, 12, 14, 18)),
    'E8': _untwisted(120, (2, 8, 12, 14, 18, 20, 24, 30)),
}

_ALIASES = {'E6+': 'E6', 'E6-': '2E6'}


def universal_order(tag: str) -> OrderExpr:
    """
    Order of the universal (simply connected) group of Lie type ``tag``.

    Besides the exceptional tags this understands classical tags ``An+``,
    ``An-`` (unitary), ``Bn``, ``Cn``, ``Dn+`` and ``Dn-`` as well as
    ``E6+`` and ``E6-``.

    :raises DomainError: for an unknown tag
    """
    tag = _ALIASES.get(tag, tag)
    if tag in _EXCEPTIONAL_ORDERS:
        return _EXCEPTIONAL_ORDERS[tag]

    match = _CLASSICAL.match(tag)
    if match is None:
        raise DomainError('unknown Lie type {!r}'.format(tag))

    kind, n, sign = match.group(1), int(match.group(2)), match.group(3)
    eps = -1 if sign == '-' else 1
    if n < 1 or (kind == 'D' and n < 2):
        raise DomainError('unknown Lie type {!r}'.format(tag))
    if kind == 'A':
        return linear_order(n + 1, eps)
    if kind in 'BC':
        return symplectic_order(n)
    return orthogonal_order(n, eps)


@dataclass(frozen=True)
class GroupFamily:
    """
    One of the ten exceptional families.

    :param tag: Short ASCII name, e.g. ``2E6``
    :param name: Display name
    :param constraint: Prime powers for which the group is defined and simple
    :param center: ``q -> |Z(X_univ)|``
    :param out: ``q -> |Out(X)|``
    """
    tag: str
    name: str
    constraint: QueryLike
    center: Callable[[PrimePower], int] = field(compare=False)
    out: Callable[[PrimePower], int] = field(compare=False)

    @property
    def order(self) -> OrderExpr:
        return _EXCEPTIONAL_ORDERS[self.tag]


def _one(_: PrimePower) -> int:
    return 1


def _f(pp: PrimePower) -> int:
    return pp.f


def _out_2f4(pp: PrimePower) -> int:
    return 2 if pp.q == 2 else pp.f


def _out_g2(pp: PrimePower) -> int:
    return 2 * pp.f if pp.p == 3 else pp.f


def _out_f4(pp: PrimePower) -> int:
    return 2 * pp.f if pp.p == 2 else pp.f


def _center_e6(pp: PrimePower) -> int:
    return gcd(3, pp.q - 1)


def _center_2e6(pp: PrimePower) -> int:
    return gcd(3, pp.q + 1)


def _center_e7(pp: PrimePower) -> int:
    return gcd(2, pp.q - 1)


FAMILIES: Dict[str, GroupFamily] = {fam.tag: fam for fam in (
    GroupFamily('2B2', 'Suzuki', (Q.p == 2) & Q.f.odd() & (Q.q >= 8),
                _one, _f),
    GroupFamily('2G2', 'Ree', (Q.p == 3) & Q.f.odd() & (Q.q >= 27),
                _one, _f),
    GroupFamily('3D4', 'triality', ANY_Q, _one, lambda pp: 3 * pp.f),
    GroupFamily('2F4', 'large Ree', (Q.p == 2) & Q.f.odd(), _one, _out_2f4),
    GroupFamily('G2', 'G2', Q.q >= 3, _one, _out_g2),
    GroupFamily('F4', 'F4', ANY_Q, _one, _out_f4),
    GroupFamily('E6', 'E6', ANY_Q, _center_e6,
                lambda pp: 2 * pp.f * _center_e6(pp)),
    GroupFamily('2E6', 'twisted E6', ANY_Q, _center_2e6,
                lambda pp: 2 * pp.f * _center_2e6(pp)),
    GroupFamily('E7', 'E7', ANY_Q, _center_e7,
                lambda pp: pp.f * _center_e7(pp)),
    GroupFamily('E8', 'E8', ANY_Q, _one, _f),
)}

EXCEPTIONAL_TAGS = tuple(FAMILIES)


def family(tag: str) -> GroupFamily:
    """
    :raises DomainError: if ``tag`` names no exceptional family
    """
    try:
        return FAMILIES[_ALIASES.get(tag, tag)]
    except KeyError:
        raise DomainError('unknown exceptional family {!r}'.format(tag))


def _as_power(q) -> PrimePower:
    return q if isinstance(q, PrimePower) else PrimePower.of(q)


def valid_q(tag: str, q) -> bool:
    """
    Whether the group of type ``tag`` over GF(q) is defined and simple.
    """
    return bool(family(tag).constraint(_as_power(q)))


def center_order(tag: str, q) -> int:
    return family(tag).center(_as_power(q))


def out_order(tag: str, q) -> int:
    """
    ``|Out(X)|``. For ``2F4(2)`` this is the outer automorphism group of the
    Tits group.
    """
    return family(tag).out(_as_power(q))


def order_of(tag: str, q) -> int:
    """
    Order of the simple group ``X = X_univ / Z``. For ``2F4(2)`` the Tits
    group is returned.

    :raises DomainError: if the group is not defined or not simple at ``q``
    """
    pp = _as_power(q)
    fam = family(tag)
    if fam.tag == '2F4' and pp.q == 2:
        return TITS_ORDER
    if not fam.constraint(pp):
        raise DomainError('{}({}) is not a simple group'.format(fam.tag, pp.q))
    return fam.order(pp.q) // fam.center(pp)
