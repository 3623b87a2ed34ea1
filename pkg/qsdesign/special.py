"""
Case analyses that the generic sieve cannot finish.

Three situations are handled here:

* ``G2(q)`` acting on the cosets of ``SL3(q).2`` or ``SU3(q).2``: the index
  grows like ``q^6`` while the gcd bound grows like ``q^6`` too, so a
  subdegree ``D(q)`` with ``r / (r, lambda) | D(q)`` is used instead,
* the Suzuki groups on the cosets of the Borel subgroup, ``v = q^2 + 1``,
* the small Ree groups on the cosets of the Borel subgroup, ``v = q^3 + 1``.

Each analysis combines an exhaustive parameter search for ``q`` up to a
scan cap with closed-form branch checks that hold for every ``q``.

For the Borel cases ``W = v - 1`` is a power of ``p`` and with
``a = (y - 1)_p`` every solution satisfies

    ``m k^2 - (2m + a) k + m + a y = m (y - 1) W``

for some ``1 <= m <= a``. The p-part of ``k`` divides ``m + a y`` and its
p'-part divides ``y (m + a)``, which leaves finitely many ``k`` per branch.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, List, NamedTuple, Optional, Tuple

from sympy import integer_nthroot

from .errors import DomainError
from .exactmath import IntPoly, Poly, PrimePower, RatPoly, divisors_sorted, \
    p_part, positive_root_cutoff, powers_of, prime_power_stream
from .groups import FAMILIES, valid_q
from .report import ELIMINATED, SURVIVOR, ReportEntry
from .sieve import DEFAULT_CONFIG, DesignParams, SieveConfig, \
    design_from_block_size, param_search
from .utils import lcm

__all__ = ('CaseAnalysis', 'QuadraticCandidate', 'G2Variant', 'G2_VARIANTS',
           'g2_branch_bound', 'g2_branches', 'g2_a2_check',
           'suzuki_check', 'ree_check', 'quadratic_case_solver',
           'branch_divisor_bound', 'special_cases', 'run_special',
           'SPECIAL_CASE_IDS')


@dataclass(frozen=True)
class CaseAnalysis:
    """
    One special case.

    :param divisor: ``q -> D(q)`` with ``r / (r, lambda) | D(q)``
    :param index: ``q -> v``
    :param cap: Name of the :class:`SieveConfig` field holding the scan cap
    """
    id: str
    family: str
    subgroup: str
    index: Callable[[PrimePower], int]
    divisor: Callable[[PrimePower], int]
    cap: str

    def field_sizes(self, q_max: int) -> Iterator[PrimePower]:
        constraint = FAMILIES[self.family].constraint
        if self.family == '2B2':
            return powers_of(2, q_max, constraint)
        if self.family == '2G2':
            return powers_of(3, q_max, constraint)
        return prime_power_stream(constraint, q_max)

    def scan(self, q_max: int,
             config: SieveConfig) -> Tuple[int, List[ReportEntry]]:
        """
        Search parameters at every field size up to ``q_max``.

        :returns: The number of field sizes scanned and one entry per field
                  size with surviving parameters
        """
        count, survivors = 0, []
        for pp in self.field_sizes(q_max):
            count += 1
            d = self.divisor(pp)
            found = param_search(self.index(pp), config.y_values,
                                 r_divisor=d)
            if found:
                survivors.append(self.entry('param-search', SURVIVOR, q=pp.q,
                                            a=d, params=_tuples(found)))
        return count, survivors

    def entry(self, stage: str, verdict: str, **kwargs) -> ReportEntry:
        return ReportEntry(case_id=self.id, family=self.family,
                           subgroup=self.subgroup, stage=stage,
                           verdict=verdict, **kwargs)


def _tuples(params: List[DesignParams]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(p) for p in params)


# --- Closed-form branches ----------------------------------------------------

class QuadraticCandidate(NamedTuple):
    """
    A block size ``k`` for which ``(y - 1) W`` must equal ``value``.
    """
    k: int
    multiplier: int
    value: int

    @property
    def power(self) -> Optional[int]:
        """
        ``W`` if ``value`` is divisible by ``y - 1``.
        """
        if self.value % self.multiplier:
            return None
        return self.value // self.multiplier


def branch_divisor_bound(m: int, a: int, y: int, p: int) -> int:
    """
    ``N`` with ``k | N``: the p-part of ``m + a y`` times the p'-part of
    ``y (m + a)``.
    """
    rest = y * (m + a)
    return p_part(m + a * y, p) * (rest // p_part(rest, p))


def quadratic_case_solver(m: int, a: int, y: int,
                          bound: int) -> List[QuadraticCandidate]:
    """
    Solve ``m k^2 - (2m + a) k + m + a y = m (y - 1) W`` over the divisors
    ``k`` of ``bound``.

    A divisor is kept when ``y | k``, ``k > y``, ``a | m (k - 1)`` (so that
    ``lambda`` is an integer) and the left-hand side is divisible by ``m``.

    >>> quadratic_case_solver(2, 4, 5, 15)
    [QuadraticCandidate(k=15, multiplier=4, value=176)]
    """
    if m < 1 or a < 1 or y < 2 or bound < 1:
        raise DomainError('invalid branch m={}, a={}, y={}, N={}'
                          .format(m, a, y, bound))

    found = []
    for k in divisors_sorted(bound):
        if k <= y or k % y or (m * (k - 1)) % a:
            continue
        lhs = m * k * k - (2 * m + a) * k + m + a * y
        if lhs <= 0 or lhs % m:
            continue
        found.append(QuadraticCandidate(k, y - 1, lhs // m))
    return found


def _field_power(w: int, exponent: int, family: str) -> Optional[PrimePower]:
    """
    The ``q`` valid for ``family`` with ``q^exponent == w``, if any.
    """
    if w < 2:
        return None
    root, exact = integer_nthroot(w, exponent)
    if not exact:
        return None
    try:
        pp = PrimePower.of(int(root))
    except DomainError:
        return None
    return pp if valid_q(family, pp) else None


@dataclass(frozen=True)
class BranchResult:
    closed: bool
    notes: Tuple[str, ...]
    survivors: Tuple[DesignParams, ...] = ()


def _close_candidate(cand: QuadraticCandidate, y: int, exponent: int,
                     family: str) -> BranchResult:
    w = cand.power
    label = 'k={}: {}W = {}'.format(cand.k, cand.multiplier, cand.value)
    if w is None:
        return BranchResult(True, (label + ', W is not an integer',))

    pp = _field_power(w, exponent, family)
    if pp is None:
        return BranchResult(True, ('{}, W = {} is not q^{} for a valid q'
                                   .format(label, w, exponent),))

    params = design_from_block_size(w + 1, y, cand.k)
    if params is None:
        return BranchResult(True, ('{}, q = {} gives no design'
                                   .format(label, pp.q),))
    return BranchResult(False, ('{}, q = {} survives'.format(label, pp.q),),
                        (params,))


def borel_branches(p: int, exponent: int, family: str,
                   y_values) -> BranchResult:
    """
    Close every ``(y, m)`` branch of the Borel case with ``W = q^exponent``.
    """
    notes, survivors = [], []
    for y in y_values:
        a = p_part(y - 1, p)
        for m in range(1, a + 1):
            bound = branch_divisor_bound(m, a, y, p)
            candidates = quadratic_case_solver(m, a, y, bound)
            head = 'y={}, a={}, m={}, N={}'.format(y, a, m, bound)
            if not candidates:
                notes.append(head + ': no block size')
                continue
            for cand in candidates:
                result = _close_candidate(cand, y, exponent, family)
                notes.extend('{}: {}'.format(head, n) for n in result.notes)
                survivors.extend(result.survivors)
    return BranchResult(not survivors, tuple(notes), tuple(survivors))


def _alternative_readings(p: int, exponent: int,
                          family: str, y_values) -> Tuple[str, ...]:
    # Reading the value itself as q^e instead of (y-1) q^e
    notes = []
    for y in y_values:
        a = p_part(y - 1, p)
        if a == 1:
            continue
        for m in range(1, a + 1):
            bound = branch_divisor_bound(m, a, y, p)
            for cand in quadratic_case_solver(m, a, y, bound):
                if cand.multiplier == 1:
                    continue
                pp = _field_power(cand.value, exponent, family)
                notes.append('y={}, m={}, k={}: reading q^{} = {} {}'.format(
                    y, m, cand.k, exponent, cand.value,
                    'gives q = {}'.format(pp.q) if pp else 'is impossible '
                    'as well'))
    return tuple(notes)


# --- G2 on the cosets of SL3(q).2 and SU3(q).2 ----------------------------

def g2_divisor(eps: int, pp: PrimePower) -> int:
    """
    The subdegree bound ``D(q)`` of the ``A2^eps`` action.
    """
    cube = pp.q ** 3
    if pp.p != 2:
        return (cube - eps) // 2
    return cube - 1 if eps == 1 else 3 * (cube + 1)


def g2_index(eps: int, pp: PrimePower) -> int:
    cube = pp.q ** 3
    return cube * (cube + eps) // 2


_CUBE = RatPoly.q()


class G2Variant(NamedTuple):
    """
    The ``A2^eps`` action for one parity of ``q``, with ``v`` and ``D`` as
    polynomials in ``Q = q^3``.
    """
    eps: int
    even: bool

    def __str__(self):
        return 'eps={}, q {}'.format('+' if self.eps == 1 else '-',
                                     'even' if self.even else 'odd')

    @property
    def index(self) -> RatPoly:
        return _CUBE * (_CUBE + self.eps) * Fraction(1, 2)

    @property
    def divisor(self) -> RatPoly:
        if not self.even:
            return (_CUBE - self.eps) * Fraction(1, 2)
        return _CUBE - 1 if self.eps == 1 else 3 * (_CUBE + 1)

    def field_sizes(self, cube_max: int) -> List[PrimePower]:
        """
        The valid ``q`` of this parity with ``q^3 <= cube_max``.
        """
        if cube_max < 1:
            return []
        root = int(integer_nthroot(cube_max, 3)[0])
        return [pp for pp in prime_power_stream(FAMILIES['G2'].constraint,
                                                root)
                if (pp.p == 2) == self.even]


G2_VARIANTS = tuple(G2Variant(eps, even)
                    for eps in (1, -1) for even in (False, True))


def _integral(poly: Poly) -> IntPoly:
    # scaled by the lcm of the coefficient denominators
    return (poly * poly.to_rat().denominator()).to_int()


def _cutoff_below(poly: Poly) -> Optional[int]:
    """
    A ``B`` with ``poly(Q) <= 0`` for every ``Q > B``, if one exists.
    """
    if poly.is_zero():
        return 0
    if poly.lc > 0:
        return None
    return positive_root_cutoff(_integral(-poly))


def g2_branch_bound(variant: G2Variant, u: int,
                    y: int) -> Tuple[Optional[int], str]:
    """
    Bound ``Q = q^3`` on the branch ``r / lambda = D / u`` with intersection
    number ``y``.

    Then ``k - 1 = u (v - 1) / D`` and ``lambda = (k - y) / M`` with
    ``M = k - 1 - (y - 1) D / u``. The branch is closed beyond the returned
    bound by the first argument that applies: ``v - 1`` leaves the window
    ``(y-1)(r/lambda)^2 < v - 1 < 2(y-1)(r/lambda)^2``, ``lambda <= y``,
    integrality of ``lambda`` or integrality of ``b = v r / k``.

    :returns: The bound (``None`` if no argument applies) and the reason
    """
    v, d = variant.index, variant.divisor
    w, s = v - 1, y - 1

    for poly in (u * u * w - s * d * d, 2 * s * d * d - u * u * w):
        cutoff = _cutoff_below(poly)
        if cutoff is not None:
            return cutoff, 'v-1 outside the window'

    k1 = (u * w).exact_div(d)
    k = k1 + 1
    num, den = k - y, k1 - d * Fraction(s, u)
    if den.is_zero():
        return 0, 'lambda is undefined'
    if den.lc < 0:
        num, den = -num, -den

    cutoff = _cutoff_below(num - y * den)
    if cutoff is not None:
        return max(cutoff, positive_root_cutoff(_integral(den))), \
            'lambda <= y'

    if num.degree == den.degree >= 1:
        scale = lcm(num.to_rat().denominator(), den.to_rat().denominator())
        N, M = (num * scale).to_int(), (den * scale).to_int()
        c = M.lc * N - N.lc * M
        if c.is_zero():
            lam = Fraction(N.lc, M.lc)
            if lam.denominator != 1:
                return 0, 'lambda = {} is not an integer'.format(lam)
        elif c.degree == 0:
            # M(Q) (lc(M) lambda - lc(N)) = c with a nonzero integer factor
            return positive_root_cutoff(M - abs(c.lc)), \
                'integral lambda forces M(Q) | {}'.format(abs(c.lc))

    if den.degree == 0 and k.degree >= 1:
        quot, rem = (v * num * d * Fraction(1, u * den.lc)).divrem(k)
        if rem.degree == 0:
            scale = lcm(quot.to_rat().denominator(),
                        rem.to_rat().denominator())
            limit = int(abs(rem.lc * scale))
            t = k.to_rat().denominator()
            return positive_root_cutoff(_integral(k) - limit * t), \
                'integral b forces k | {}'.format(limit)

    return None, 'open'


def _branch_survivors(variant: G2Variant, u: int, y: int,
                      cube_max: int) -> List[DesignParams]:
    found = []
    for pp in variant.field_sizes(cube_max):
        v, d = g2_index(variant.eps, pp), g2_divisor(variant.eps, pp)
        if (u * (v - 1)) % d:
            continue
        params = design_from_block_size(v, y, u * (v - 1) // d + 1)
        if params is not None:
            found.append(params)
    return found


def g2_branches(variant: G2Variant, y_values) -> BranchResult:
    """
    Close every branch ``r / lambda = D / u`` of one variant.

    Large ``u`` is handled at once: ``v - 1 < 2(y-1)(D/u)^2`` only gets
    harder as ``u`` grows and ``y`` shrinks, so the first ``u0`` for which it
    fails at the largest ``y`` from some ``Q`` on disposes of every
    ``u >= u0``. The field sizes below each bound are checked directly.
    """
    y_values = sorted(set(y_values))
    v, d = variant.index, variant.divisor
    s = y_values[-1] - 1

    u0 = 1
    while _cutoff_below(2 * s * d * d - u0 * u0 * (v - 1)) is None:
        u0 += 1
    tail = _cutoff_below(2 * s * d * d - u0 * u0 * (v - 1))

    notes, survivors, closed = [], [], True
    for pp in variant.field_sizes(tail):
        found = param_search(g2_index(variant.eps, pp), y_values,
                             r_divisor=g2_divisor(variant.eps, pp))
        survivors.extend(found)

    count = 0
    for u in range(1, u0):
        for y in y_values:
            bound, reason = g2_branch_bound(variant, u, y)
            if bound is None:
                closed = False
                notes.append('{}, u={}, y={}: open'.format(variant, u, y))
                continue
            count += 1
            if reason != 'v-1 outside the window':
                notes.append('{}, u={}, y={}: {} for Q > {}'.format(
                    variant, u, y, reason, bound))
            survivors.extend(_branch_survivors(variant, u, y, bound))

    notes.append('{}: u>={} fails v-1 < 2(y-1)(r/lambda)^2 for Q > {}; '
                 '{} branches with u<{} closed'.format(variant, u0, tail,
                                                      count, u0))
    return BranchResult(closed and not survivors, tuple(notes),
                        tuple(survivors))

def _analysis(case_id: str) -> CaseAnalysis:
    if case_id in ('S:G2:A2+', 'S:G2:A2-'):
        eps = 1 if case_id.endswith('+') else -1
        sign = '+' if eps == 1 else '-'
        return CaseAnalysis(
            case_id, 'G2', 'A2{}(q)'.format(sign),
            lambda pp: g2_index(eps, pp), lambda pp: g2_divisor(eps, pp),
            'g2_q_max')
    if case_id == 'S:SUZUKI':
        return CaseAnalysis(case_id, '2B2', '[q^2]:(q-1)',
                            lambda pp: pp.q ** 2 + 1, lambda pp: pp.q ** 2,
                            'suzuki_q_max')
    if case_id == 'S:REE':
        return CaseAnalysis(case_id, '2G2', '[q^3]:(q-1)',
                            lambda pp: pp.q ** 3 + 1, lambda pp: pp.q ** 3,
                            'ree_q_max')
    raise DomainError('unknown special case {!r}'.format(case_id))


SPECIAL_CASE_IDS = ('S:G2:A2+', 'S:G2:A2-', 'S:REE', 'S:SUZUKI')


def special_cases() -> List[CaseAnalysis]:
    return [_analysis(case_id) for case_id in SPECIAL_CASE_IDS]


def _finish(analysis: CaseAnalysis, q_max: int, count: int,
            survivors: List[ReportEntry], closed: bool,
            notes: List[str], params=()) -> List[ReportEntry]:
    notes.insert(0, 'scanned {} field sizes q <= {}'.format(count, q_max))
    verdict = ELIMINATED if closed and not survivors else SURVIVOR
    head = analysis.entry('special', verdict, params=_tuples(list(params)),
                          annotations=tuple(notes))
    return [head] + survivors


def g2_a2_check(eps: int, q_max: Optional[int] = None,
                config: SieveConfig = DEFAULT_CONFIG) -> List[ReportEntry]:
    """
    Eliminate ``G2(q)`` on the cosets of ``A2^eps(q).2``.

    :param eps: ``+1`` for ``SL3``, ``-1`` for ``SU3``
    """
    if eps not in (1, -1):
        raise DomainError('eps must be +1 or -1')

    analysis = _analysis('S:G2:A2+' if eps == 1 else 'S:G2:A2-')
    cap = config.g2_q_max if q_max is None else q_max
    count, survivors = analysis.scan(cap, config)

    closed, notes, params = True, [], []
    for variant in G2_VARIANTS:
        if variant.eps != eps:
            continue
        branches = g2_branches(variant, config.y_values)
        closed = closed and branches.closed
        notes.extend(branches.notes)
        params.extend(branches.survivors)

    return _finish(analysis, cap, count, survivors, closed, notes, params)


def _borel_check(case_id: str, p: int, exponent: int, q_max: Optional[int],
                 config: SieveConfig) -> List[ReportEntry]:
    analysis = _analysis(case_id)
    cap = getattr(config, analysis.cap) if q_max is None else q_max
    count, survivors = analysis.scan(cap, config)

    branches = borel_branches(p, exponent, analysis.family, config.y_values)
    notes = list(branches.notes)
    if p == 3:
        notes.extend(_alternative_readings(p, exponent, analysis.family,
                                           config.y_values))
    return _finish(analysis, cap, count, survivors, branches.closed, notes,
                   branches.survivors)


def suzuki_check(q_max: Optional[int] = None,
                 config: SieveConfig = DEFAULT_CONFIG) -> List[ReportEntry]:
    """
    Eliminate the Suzuki groups on the cosets of a Borel subgroup,
    ``v = q^2 + 1`` and ``r | lambda q^2``.
    """
    return _borel_check('S:SUZUKI', 2, 2, q_max, config)


def ree_check(q_max: Optional[int] = None,
              config: SieveConfig = DEFAULT_CONFIG) -> List[ReportEntry]:
    """
    Eliminate the small Ree groups on the cosets of a Borel subgroup,
    ``v = q^3 + 1`` and ``r | lambda q^3``.
    """
    return _borel_check('S:REE', 3, 3, q_max, config)


def run_special(case_id: str,
                config: SieveConfig = DEFAULT_CONFIG) -> List[ReportEntry]:
    if case_id == 'S:G2:A2+':
        return g2_a2_check(1, config=config)
    if case_id == 'S:G2:A2-':
        return g2_a2_check(-1, config=config)
    if case_id == 'S:SUZUKI':
        return suzuki_check(config=config)
    if case_id == 'S:REE':
        return ree_check(config=config)
    raise DomainError('unknown special case {!r}'.format(case_id))
