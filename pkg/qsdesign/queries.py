"""
Composable constraints on prime powers.

Starting with :class:`~qsdesign.queries.PowerQuery` you can describe the
field sizes a case applies to:

>>> Q = PowerQuery()
>>> suzuki = (Q.p == 2) & Q.f.odd() & (Q.q >= 8)
>>> suzuki(PrimePower.of(32))
True
>>> suzuki(PrimePower.of(2))
False

Constraints are evaluated by calling them with a
:class:`~qsdesign.exactmath.PrimePower`. Every constraint carries a stable
hash value describing it, so equal constraints compare and hash equal and can
key a cache.
"""

from typing import Any, Callable, Iterable, Optional, Protocol, Tuple

__all__ = ('QueryLike', 'QueryInstance', 'PowerQuery', 'where', 'ANY_Q')

FIELDS = ('p', 'f', 'q')


class QueryLike(Protocol):
    """
    Something usable as a prime-power constraint: callable on a prime power
    and hashable.
    """
    def __call__(self, value: Any) -> bool: ...

    def __hash__(self) -> int: ...


class QueryInstance:
    """
    A constraint instance.

    :class:`PowerQuery` acts as the builder and produces instances which
    evaluate against a prime power when called. Instances combine with ``&``
    and ``|`` and invert with ``~``.
    """

    def __init__(self, test: Callable[[Any], bool], hashval: Optional[Tuple]):
        self._test = test
        self._hash = hashval

    def is_cacheable(self) -> bool:
        return self._hash is not None

    def __call__(self, value: Any) -> bool:
        """
        Evaluate the constraint on a prime power.

        :param value: The :class:`~qsdesign.exactmath.PrimePower` to check.
        :return: Whether it satisfies this constraint.
        """
        return self._test(value)

    def __hash__(self) -> int:
        return hash(self._hash)

    def __repr__(self):
        return 'QueryImpl{}'.format(self._hash)

    def __eq__(self, other: object):
        if isinstance(other, QueryInstance):
            return self._hash == other._hash

        return False

    # --- Query modifiers -----------------------------------------------------

    def __and__(self, other: 'QueryInstance') -> 'QueryInstance':
        # AND is commutative, so the hash ignores operand order
        if self.is_cacheable() and other.is_cacheable():
            hashval = ('and', frozenset([self._hash, other._hash]))
        else:
            hashval = None
        return QueryInstance(lambda value: self(value) and other(value),
                             hashval)

    def __or__(self, other: 'QueryInstance') -> 'QueryInstance':
        if self.is_cacheable() and other.is_cacheable():
            hashval = ('or', frozenset([self._hash, other._hash]))
        else:
            hashval = None
        return QueryInstance(lambda value: self(value) or other(value),
                             hashval)

    def __invert__(self) -> 'QueryInstance':
        hashval = ('not', self._hash) if self.is_cacheable() else None
        return QueryInstance(lambda value: not self(value), hashval)


class PowerQuery(QueryInstance):
    """
    Builder for prime-power constraints.

    Access one of the fields ``p`` (the characteristic), ``f`` (the exponent)
    or ``q`` (the field size) and compare it:

    >>> Q = PowerQuery()
    >>> (Q.p != 2) & Q.f.even()

    A bare builder without a field cannot be evaluated.
    """

    def __init__(self) -> None:
        self._field: Optional[str] = None

        def notest(_):
            raise RuntimeError('Empty constraint was evaluated')

        super().__init__(test=notest, hashval=(None,))

    def __repr__(self):
        return '{}()'.format(type(self).__name__)

    def __hash__(self):
        return super().__hash__()

    def __getattr__(self, item: str):
        if item not in FIELDS:
            raise AttributeError(item)

        query = type(self)()
        query._field = item
        query._hash = ('field', item)

        return query

    def _generate_test(self, test: Callable[[Any], bool],
                       hashval: Tuple) -> QueryInstance:
        if self._field is None:
            raise ValueError('Constraint has no field')

        field = self._field

        def runner(value):
            return test(getattr(value, field))

        return QueryInstance(runner, (hashval[0], field) + hashval[1:])

    def __eq__(self, rhs: Any):  # type: ignore[override]
        return self._generate_test(lambda value: value == rhs, ('==', rhs))

    def __ne__(self, rhs: Any):  # type: ignore[override]
        return self._generate_test(lambda value: value != rhs, ('!=', rhs))

    def __lt__(self, rhs: Any) -> QueryInstance:
        return self._generate_test(lambda value: value < rhs, ('<', rhs))

    def __le__(self, rhs: Any) -> QueryInstance:
        return self._generate_test(lambda value: value <= rhs, ('<=', rhs))

    def __gt__(self, rhs: Any) -> QueryInstance:
        return self._generate_test(lambda value: value > rhs, ('>', rhs))

    def __ge__(self, rhs: Any) -> QueryInstance:
        return self._generate_test(lambda value: value >= rhs, ('>=', rhs))

    def odd(self) -> QueryInstance:
        return self._generate_test(lambda value: value % 2 == 1, ('odd',))

    def even(self) -> QueryInstance:
        return self._generate_test(lambda value: value % 2 == 0, ('even',))

    def divisible_by(self, n: int) -> QueryInstance:
        """
        Match if the field is a multiple of ``n``.

        >>> PowerQuery().f.divisible_by(3)
        """
        return self._generate_test(lambda value: value % n == 0,
                                   ('divisible_by', n))

    def one_of(self, items: Iterable[int]) -> QueryInstance:
        """
        Match if the field is one of ``items``.

        >>> PowerQuery().q.one_of([8, 32])
        """
        items = tuple(sorted(items))
        return self._generate_test(lambda value: value in items,
                                   ('one_of', items))

    def noop(self) -> QueryInstance:
        """
        Always evaluate to ``True``.
        """
        return QueryInstance(lambda value: True, ())


def where(field: str) -> PowerQuery:
    """
    A shorthand for ``getattr(PowerQuery(), field)``.
    """
    return getattr(PowerQuery(), field)


ANY_Q = PowerQuery().noop()
