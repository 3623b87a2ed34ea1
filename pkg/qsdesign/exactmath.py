"""
Exact arithmetic in one variable ``q``.

This module contains dense polynomials over the integers (:class:`IntPoly`)
and over the rationals (:class:`RatPoly`), the extended Euclidean algorithm
producing a :class:`BezoutCertificate`, p-parts of integers and the ordered
stream of prime powers the sieve walks over.

Coefficients are stored lowest degree first; the zero polynomial has no
coefficients and degree ``-1``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import (Iterable, Iterator, List, Optional, Sequence, Tuple,
                    Union)

from sympy import divisors, factorint, integer_nthroot, isprime, \
    multiplicity, primerange

from .errors import DomainError
from .queries import QueryLike
from .utils import cached, lcm_all

__all__ = ('IntPoly', 'RatPoly', 'Poly', 'poly_product', 'binomial',
           'poly_xgcd', 'BezoutCertificate', 'gcd_bound_multiplier',
           'eval_poly', 'p_part', 'PrimePower', 'prime_powers_upto',
           'prime_power_stream', 'powers_of', 'divisors_sorted',
           'positive_root_cutoff', 'ceil_root')

Number = Union[int, Fraction]


class Poly:
    """
    Common base of :class:`IntPoly` and :class:`RatPoly`.

    Instances are immutable. Arithmetic between two integer polynomials stays
    integral, as soon as a rational polynomial is involved the result is
    rational.
    """

    __slots__ = ('coeffs',)

    coeffs: Tuple

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [self._convert(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, 'coeffs', tuple(cs))

    def __setattr__(self, key, value):
        raise AttributeError('polynomials are immutable')

    def __reduce__(self):
        return type(self), (self.coeffs,)

    @staticmethod
    def _convert(c):
        raise NotImplementedError

    # --- Constructors --------------------------------------------------------

    @classmethod
    def constant(cls, c: Number):
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: Number = 1):
        """
        The polynomial ``c * q^n``.
        """
        if n < 0:
            raise DomainError('negative exponent {}'.format(n))
        return cls([0] * n + [c])

    @classmethod
    def q(cls):
        return cls.monomial(1)

    # --- Basic properties ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Number:
        """
        The leading coefficient (0 for the zero polynomial).
        """
        return self.coeffs[-1] if self.coeffs else 0

    def lowest_term(self) -> Tuple[int, Number]:
        """
        Degree and coefficient of the lowest nonzero term.
        """
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i, c
        raise DomainError('the zero polynomial has no terms')

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x: Number) -> Number:
        return eval_poly(self, x)

    # --- Conversions ---------------------------------------------------------

    def to_rat(self) -> 'RatPoly':
        return RatPoly(self.coeffs)

    def to_int(self) -> 'IntPoly':
        return IntPoly(self.coeffs)

    def compose_power(self, r: int):
        """
        Substitute ``q -> q^r``.
        """
        if r < 1:
            raise DomainError('substitution exponent must be positive')
        if r == 1 or self.is_zero():
            return self
        cs: List[Number] = [0] * (self.degree * r + 1)
        for i, c in enumerate(self.coeffs):
            cs[i * r] = c
        return type(self)(cs)

    # --- Arithmetic ----------------------------------------------------------

    def _lift(self, other) -> Tuple['Poly', 'Poly', type]:
        if isinstance(other, (int, Fraction)):
            other = RatPoly.constant(other) if isinstance(other, Fraction) \
                else IntPoly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented  # type: ignore
        if isinstance(self, IntPoly) and isinstance(other, IntPoly):
            return self, other, IntPoly
        return self, other, RatPoly

    def __add__(self, other):
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        a, b, kind = lifted
        n = max(len(a.coeffs), len(b.coeffs))
        ac = a.coeffs + (0,) * (n - len(a.coeffs))
        bc = b.coeffs + (0,) * (n - len(b.coeffs))
        return kind(x + y for x, y in zip(ac, bc))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        return self + (-lifted[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        a, b, kind = lifted
        if a.is_zero() or b.is_zero():
            return kind()
        out: List[Number] = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
        return kind(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError('negative power of a polynomial')
        result = type(self).constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divrem(self, other: 'Poly') -> Tuple['Poly', 'Poly']:
        """
        Euclidean division ``self = quot * other + rem`` with
        ``deg rem < deg other``.

        Integer polynomials divided by a divisor with leading coefficient
        ``+-1`` stay integral, otherwise the division happens over Q.

        :raises DomainError: on division by the zero polynomial
        """
        if other.is_zero():
            raise DomainError('division by the zero polynomial')

        integral = isinstance(self, IntPoly) and isinstance(other, IntPoly) \
            and other.lc in (1, -1)
        kind = IntPoly if integral else RatPoly

        rem = list(self.coeffs) if integral \
            else [Fraction(c) for c in self.coeffs]
        dc = other.coeffs
        lead = dc[-1] if integral else Fraction(dc[-1])
        shift = len(rem) - len(dc)
        if shift < 0:
            return kind(), kind(rem)

        quot: List[Number] = [0] * (shift + 1)
        for i in range(shift, -1, -1):
            c = rem[i + len(dc) - 1]
            if c == 0:
                continue
            factor = c * lead if integral else c / lead
            quot[i] = factor
            for j, d in enumerate(dc):
                rem[i + j] -= factor * d

        return kind(quot), kind(rem[:len(dc) - 1])

    def __floordiv__(self, other: 'Poly'):
        return self.divrem(other)[0]

    def __mod__(self, other: 'Poly'):
        return self.divrem(other)[1]

    def exact_div(self, other: 'Poly'):
        """
        Divide, insisting on a zero remainder. The quotient keeps the type of
        ``self`` whenever it is integral.

        :raises DomainError: if the division leaves a remainder
        """
        quot, rem = self.divrem(other)
        if not rem.is_zero():
            raise DomainError('{} is not divisible by {}'.format(self, other))
        if isinstance(self, IntPoly) and isinstance(quot, RatPoly) \
                and all(c.denominator == 1 for c in quot.coeffs):
            return quot.to_int()
        return quot

    # --- Comparison ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # --- Printing ------------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return '0'

        parts = []
        for n in range(self.degree, -1, -1):
            c = self.coeffs[n]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            mag = -c if c < 0 else c
            if n == 0:
                body = str(mag)
            else:
                var = 'q' if n == 1 else 'q^{}'.format(n)
                body = var if mag == 1 else '{}*{}'.format(mag, var)
            parts.append((sign, body))

        first_sign, first = parts[0]
        text = ('-' if first_sign == '-' else '') + first
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, self)


class IntPoly(Poly):
    """
    A polynomial with integer coefficients.
    """

    __slots__ = ()

    @staticmethod
    def _convert(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise DomainError('non-integral coefficient {}'.format(c))
            return c.numerator
        if isinstance(c, bool) or not isinstance(c, int):
            raise DomainError('invalid coefficient {!r}'.format(c))
        return c

    def content(self) -> int:
        """
        The gcd of all coefficients (0 for the zero polynomial).
        """
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g


class RatPoly(Poly):
    """
    A polynomial with rational coefficients.
    """

    __slots__ = ()

    @staticmethod
    def _convert(c):
        if isinstance(c, bool):
            raise DomainError('invalid coefficient {!r}'.format(c))
        return Fraction(c)

    def monic(self) -> 'RatPoly':
        if self.is_zero():
            raise DomainError('the zero polynomial has no monic associate')
        lead = self.lc
        return RatPoly(c / lead for c in self.coeffs)

    def denominator(self) -> int:
        """
        The lcm of all coefficient denominators.
        """
        return lcm_all(c.denominator for c in self.coeffs)


def binomial(d: int, eps: int = 1) -> IntPoly:
    """
    The polynomial ``q^d - eps``.
    """
    return IntPoly.monomial(d) - eps


def poly_product(polys: Iterable[Poly]) -> Poly:
    result: Poly = IntPoly.constant(1)
    for poly in polys:
        result = result * poly
    return result


def eval_poly(poly: Poly, x: Number) -> Number:
    """
    Evaluate ``poly`` at ``x`` with Horner's rule.

    An integer polynomial evaluated at an integer gives an exact ``int``.
    """
    acc: Number = 0
    for c in reversed(poly.coeffs):
        acc = acc * x + c
    if isinstance(acc, Fraction) and acc.denominator == 1:
        return acc.numerator
    return acc


# --- Extended GCD ------------------------------------------------------------

@dataclass(frozen=True)
class BezoutCertificate:
    """
    ``s * F + t * G == h`` with ``h`` the monic gcd of ``F`` and ``G`` over Q
    and ``c`` the lcm of the denominators of ``s`` and ``t``.
    """
    h: RatPoly
    s: RatPoly
    t: RatPoly
    c: int

    def verify(self, F: Poly, G: Poly) -> bool:
        return self.s * F + self.t * G == self.h


def poly_xgcd(F: Poly, G: Poly) -> BezoutCertificate:
    """
    Extended Euclid over Q.

    The returned cofactors are the minimal-degree ones: whenever ``F/h`` and
    ``G/h`` are non-constant, ``deg s < deg G - deg h`` and
    ``deg t < deg F - deg h``.

    :raises DomainError: if both polynomials are zero
    """
    if F.is_zero() and G.is_zero():
        raise DomainError('the gcd of two zero polynomials is undefined')

    r0, r1 = F.to_rat(), G.to_rat()
    s0, s1 = RatPoly.constant(1), RatPoly()
    t0, t1 = RatPoly(), RatPoly.constant(1)

    while not r1.is_zero():
        quot, rem = r0.divrem(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quot * s1
        t0, t1 = t1, t0 - quot * t1

    lead = r0.lc
    h = RatPoly(c / lead for c in r0.coeffs)
    s = RatPoly(c / lead for c in s0.coeffs)
    t = RatPoly(c / lead for c in t0.coeffs)

    c = lcm_all([s.denominator(), t.denominator()])
    return BezoutCertificate(h=h, s=s, t=t, c=c)


def gcd_bound_multiplier(F: Poly, G: Poly) -> Tuple[int, IntPoly]:
    """
    Find ``c`` and an integer polynomial ``h_int`` such that for every
    integer ``q0`` the number ``gcd(F(q0), G(q0))`` divides
    ``c * h_int(q0)``.

    >>> gcd_bound_multiplier(IntPoly.monomial(2), IntPoly.monomial(3))
    (1, IntPoly(q^2))
    """
    cert = poly_xgcd(F, G)
    e = cert.h.denominator()
    h_int = (cert.h * e).to_int()
    c = lcm_all([(cert.s * e).denominator(), (cert.t * e).denominator()])
    return c, h_int


# --- Integers ----------------------------------------------------------------

def p_part(n: int, p: int) -> int:
    """
    The largest power of the prime ``p`` dividing ``n``.

    :raises DomainError: if ``n`` is zero or ``p`` is not a prime
    """
    if n == 0:
        raise DomainError('the p-part of 0 is undefined')
    if not isprime(p):
        raise DomainError('{} is not a prime'.format(p))
    return p ** multiplicity(p, abs(n))


def ceil_root(x: int, n: int) -> int:
    """
    The smallest integer ``t >= 0`` with ``t^n >= x``.
    """
    if x <= 0:
        return 0
    root, exact = integer_nthroot(x, n)
    return int(root) if exact else int(root) + 1


def positive_root_cutoff(poly: IntPoly) -> int:
    """
    An integer ``B`` such that ``poly(x) > 0`` for every integer ``x > B``.

    Uses the two-times-the-maximum bound on positive real roots: every
    positive root is below ``2 * max (|a_{n-i}| / a_n)^(1/i)`` taken over the
    negative coefficients.

    :raises DomainError: if the leading coefficient is not positive
    """
    if poly.is_zero() or poly.lc <= 0:
        raise DomainError('{} does not tend to +infinity'.format(poly))

    n, lead = poly.degree, poly.lc
    bound = 0
    for i in range(1, n + 1):
        c = poly.coeffs[n - i]
        if c < 0:
            bound = max(bound, ceil_root(-(c // lead), i))
    return 2 * bound


# --- Prime powers ------------------------------------------------------------

@dataclass(frozen=True, order=True)
class PrimePower:
    """
    A field size ``q = p^f``. Ordered by ``q``.
    """
    q: int
    p: int
    f: int

    @classmethod
    def of(cls, q: int) -> 'PrimePower':
        """
        :raises DomainError: if ``q`` is not a prime power
        """
        if q < 2:
            raise DomainError('{} is not a prime power'.format(q))
        factors = factorint(q)
        if len(factors) != 1:
            raise DomainError('{} is not a prime power'.format(q))
        (p, f), = factors.items()
        return cls(q=q, p=int(p), f=int(f))

    def root(self, r: int) -> 'PrimePower':
        """
        The subfield size ``q^(1/r)``.

        :raises DomainError: if ``r`` does not divide ``f``
        """
        if self.f % r:
            raise DomainError('{} has no {}-th root field'.format(self.q, r))
        return PrimePower(q=self.p ** (self.f // r), p=self.p, f=self.f // r)

    def __int__(self):
        return self.q

    def __str__(self):
        return str(self.q)


@cached(capacity=8)
def prime_powers_upto(q_max: int) -> Tuple[PrimePower, ...]:
    """
    All prime powers ``q <= q_max`` in increasing order.
    """
    found: List[PrimePower] = []
    for p in primerange(2, q_max + 1):
        p = int(p)
        q, f = p, 1
        while q <= q_max:
            found.append(PrimePower(q=q, p=p, f=f))
            q *= p
            f += 1
    return tuple(sorted(found))


def prime_power_stream(constraint: Optional[QueryLike],
                       q_max: int) -> Iterator[PrimePower]:
    """
    Yield the prime powers ``q <= q_max`` satisfying ``constraint`` in
    increasing order. The underlying table is cached per ``q_max``.
    """
    for pp in prime_powers_upto(q_max):
        if constraint is None or constraint(pp):
            yield pp


def powers_of(p: int, q_max: int,
              constraint: Optional[QueryLike] = None) -> Iterator[PrimePower]:
    """
    Yield ``p^f <= q_max`` for ``f = 1, 2, ...`` satisfying ``constraint``.

    Used for single-characteristic families whose bound exceeds the cached
    table size.
    """
    q, f = p, 1
    while q <= q_max:
        pp = PrimePower(q=q, p=p, f=f)
        if constraint is None or constraint(pp):
            yield pp
        q *= p
        f += 1


def divisors_sorted(n: int) -> Sequence[int]:
    return [int(d) for d in divisors(n)]
