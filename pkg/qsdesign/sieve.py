"""
The elimination engine.

A case is eliminated in up to four steps:

1. a symbolic bound ``r / (r, lambda) <= c * h(q) * |Out(X)|`` derived from a
   Bezout certificate for ``d * (v - 1)`` and the subgroup order,
2. the finite list of ``q`` for which ``v <= 18 * (c * h(q) * |Out|)^2``
   can still hold,
3. the exact value ``a = gcd(v - 1, |H| * |Out|)`` at each of those ``q``,
4. a search for design parameters at every ``q`` that survives.

Parabolic cases replace the first step by the p-power subdegree (or by the
rank-3 subdegrees of ``E6``). Everything here is a pure function of the case
and a :class:`SieveConfig`.
"""

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Callable, Iterable, List, NamedTuple, Optional, Tuple, \
    Union

from .catalog import GCD, P_POWER, RANK3, SPECIAL, ParabolicCase, \
    SubgroupCase
from .errors import DomainError
from .exactmath import IntPoly, PrimePower, divisors_sorted, \
    gcd_bound_multiplier, p_part, positive_root_cutoff
from .groups import OrderExpr, out_order, valid_q
from .report import ELIMINATED, ROUTE_PREFIX, ROUTED, SURVIVOR, \
    UNRESOLVED, ReportEntry
from .utils import ceil_div

__all__ = ('SieveConfig', 'DesignParams', 'StageOutcome', 'BoundCertificate',
           'param_search', 'bound_stage', 'q_feasible', 'exact_stage',
           'run_case', 'run_parabolic', 'SPECIAL_TARGETS')

#: Special-case ids the routed cases hand over to
SPECIAL_TARGETS = {
    'G2:A2+': 'S:G2:A2+',
    'G2:A2-': 'S:G2:A2-',
    'P:2B2': 'S:SUZUKI',
    'P:2G2': 'S:REE',
}

#: Generic bound on ``|Out(X)| / f`` over all exceptional families
OUT_PER_FIELD_DEGREE = 6

Case = Union[SubgroupCase, ParabolicCase]


@dataclass(frozen=True)
class SieveConfig:
    """
    The knobs of a replay. Every field has a default that reproduces the
    full argument.

    :param q_max: Largest ``q`` scanned for generic and parabolic cases
    :param y_values: Intersection numbers ``y`` to search
    :param y_cap_constant: The constant ``2 (y - 1)`` capped over all ``y``
    :param full_xgcd_degree: Largest ``deg F + deg G`` for which the
                             certificate of the whole subgroup order is tried
                             before the factorwise one
    """
    q_max: int = 10 ** 5
    y_values: Tuple[int, ...] = tuple(range(2, 11))
    y_cap_constant: int = 18
    suzuki_q_max: int = 2 ** 15
    ree_q_max: int = 3 ** 9
    g2_q_max: int = 2 ** 10
    workers: int = 1
    full_xgcd_degree: int = 64

    def __post_init__(self):
        ys = tuple(sorted(set(self.y_values)))
        if not ys or ys[0] < 2:
            raise DomainError('intersection numbers y must be at least 2')
        if self.y_cap_constant < 2 * (ys[-1] - 1):
            raise DomainError('y_cap_constant {} is below 2(y-1) = {}'
                              .format(self.y_cap_constant, 2 * (ys[-1] - 1)))
        if self.q_max < 2:
            raise DomainError('q_max must be at least 2')
        if self.workers < 1:
            raise DomainError('workers must be at least 1')
        object.__setattr__(self, 'y_values', ys)


DEFAULT_CONFIG = SieveConfig()


class DesignParams(NamedTuple):
    """
    Parameters of a quasi-symmetric 2-(v, k, lambda) design with ``b``
    blocks, replication number ``r`` and intersection numbers ``0`` and
    ``y``.
    """
    v: int
    b: int
    r: int
    k: int
    lam: int
    y: int

    def violations(self) -> List[str]:
        """
        Names of the design conditions these parameters break.
        """
        v, b, r, k, lam, y = self
        checks = [
            ('r(k-1) = lambda(v-1)', r * (k - 1) == lam * (v - 1)),
            ('vr = bk', v * r == b * k),
            ('b > v', b > v),
            ('k < r', k < r),
            ('2 < k < v-1', 2 < k < v - 1),
            ('(y-1)(r-1) = (k-1)(lambda-1)',
             (y - 1) * (r - 1) == (k - 1) * (lam - 1)),
            ('y | k', y >= 2 and k % y == 0),
            ('y | r-lambda', y >= 2 and (r - lam) % y == 0),
            ('y < lambda <= k-1', y < lam <= k - 1),
            ('(y-1)v < k(k-1)', (y - 1) * v < k * (k - 1)),
        ]
        return [name for name, ok in checks if not ok]

    @property
    def is_valid(self) -> bool:
        return not self.violations()


def design_from_block_size(v: int, y: int, k: int) -> Optional[DesignParams]:
    """
    Solve the design equations for ``lambda``, ``r`` and ``b`` given ``v``,
    ``y`` and ``k``.

    Eliminating ``r`` from ``r(k-1) = lambda(v-1)`` and
    ``(y-1)(r-1) = (k-1)(lambda-1)`` leaves
    ``lambda = (k-1)(k-y) / ((k-1)^2 - (y-1)(v-1))``.
    """
    m, w = k - 1, v - 1
    if k <= 2 or k >= w:
        return None

    den = m * m - (y - 1) * w
    num = m * (k - y)
    if den <= 0 or num <= 0 or num % den:
        return None
    lam = num // den

    if (lam * w) % m:
        return None
    r = lam * w // m

    if (v * r) % k:
        return None

    params = DesignParams(v=v, b=v * r // k, r=r, k=k, lam=lam, y=y)
    return params if params.is_valid else None


def param_search(v: int, y_values: Iterable[int] = DEFAULT_CONFIG.y_values,
                 r_divisor: Optional[int] = None) -> List[DesignParams]:
    """
    Find every parameter set with ``v`` points and ``y`` in ``y_values``.

    With ``m = k - 1`` and ``W = v - 1`` the conditions force
    ``(y-1) W < m^2`` and ``g = gcd(W, m)`` to satisfy
    ``m (m - g) <= (y-1)(W - g)``, so for each divisor ``g`` of ``W`` only a
    few multiples of ``g`` need to be tried. When ``r_divisor`` is given,
    ``r / gcd(r, lambda) = W / g`` must divide it, which restricts ``g``
    further.

    :param v: Number of points
    :param y_values: Non-zero block intersection numbers to try
    :param r_divisor: Optional ``D`` with ``r / gcd(r, lambda) | D``
    :returns: The parameter sets sorted by ``(k, y)``
    """
    if v < 5:
        return []

    w = v - 1
    if r_divisor is None:
        allowed = w
    else:
        allowed = gcd(w, r_divisor)
    base = w // allowed

    found = set()
    for y in sorted(set(y_values)):
        if y < 2:
            raise DomainError('intersection number y must be at least 2')
        low = isqrt((y - 1) * w) + 1

        for part in divisors_sorted(allowed):
            g = base * part
            disc = g * g + 4 * (y - 1) * (w - g)
            high = (g + isqrt(disc)) // 2 + 1

            m = ceil_div(low, g) * g
            while m <= high:
                if gcd(w, m) == g:
                    params = design_from_block_size(v, y, m + 1)
                    if params is not None and _divides_bound(params,
                                                             r_divisor):
                        found.add(params)
                m += g

    return sorted(found, key=lambda p: (p.k, p.y, p.lam))


def _divides_bound(params: DesignParams, r_divisor: Optional[int]) -> bool:
    if r_divisor is None:
        return True
    return r_divisor % (params.r // gcd(params.r, params.lam)) == 0


# --- Certificates ------------------------------------------------------------

@dataclass(frozen=True)
class BoundCertificate:
    """
    ``r / (r, lambda) <= c * |h(s)| * |Out(X)|`` for every valid ``q = s^r``.

    :param method: ``full``, ``factorwise``, ``p-part`` or ``subdegree``
    :param cutoff: Every ``s`` above it violates the bound; ``None`` when the
                   index does not outgrow the bound
    """
    method: str
    c: int
    h: IntPoly
    cutoff: Optional[int]
    root: int = 1

    @property
    def dominant(self) -> bool:
        return self.cutoff is not None

    @property
    def q_limit(self) -> Optional[int]:
        return None if self.cutoff is None else self.cutoff ** self.root

    def resolves(self, q_max: int) -> bool:
        limit = self.q_limit
        return limit is not None and limit <= q_max

    def bound(self, s: int, out: int = 1) -> int:
        return self.c * abs(self.h(s)) * out


def _majorant_cutoff(poly: IntPoly, penalty: IntPoly) -> Optional[int]:
    """
    An integer ``B`` with ``poly(s) > penalty(s)`` for all ``s > B`` when
    ``penalty`` is replaced by the sum of its absolute terms. ``None`` if
    ``poly`` does not dominate.
    """
    n = poly.degree
    if n <= penalty.degree or poly.lc <= 0:
        return None

    coeffs = []
    for i in range(n):
        own = poly.coeffs[i]
        extra = abs(penalty.coeffs[i]) if i <= penalty.degree else 0
        coeffs.append(-(max(0, -own) + extra))
    coeffs.append(poly.lc)
    return positive_root_cutoff(IntPoly(coeffs))


def _blockwise_cutoff(numerator: IntPoly, d: int, c: int, h: IntPoly,
                      root: int, y_cap: int) -> Optional[int]:
    """
    Largest ``s`` that still has to be scanned.

    On ``2^j <= s < 2^(j+1)`` the field degree of ``s`` is at most ``j``, so
    ``|Out(X)| <= 6 * root * j``. The first ``j >= 3`` whose polynomial
    bound lies below ``2^j`` settles every larger block as well because the
    bound grows at most like ``j^2``.
    """
    square = h * h
    if numerator.degree <= square.degree:
        return None

    for j in range(3, 4096):
        scale = y_cap * d * (c * OUT_PER_FIELD_DEGREE * root * j) ** 2
        bound = _majorant_cutoff(numerator, square * scale + d)
        if bound is not None and bound < 2 ** j:
            return 2 ** j - 1
    return None


def _gcd_certificate(numerator: IntPoly, d: int, order: OrderExpr, root: int,
                     config: SieveConfig) -> BoundCertificate:
    F = numerator - d
    candidates = []

    G = order.poly()
    if F.degree + G.degree <= config.full_xgcd_degree:
        c, h = gcd_bound_multiplier(F, G)
        cert = BoundCertificate(
            'full', c, h, _blockwise_cutoff(numerator, d, c, h, root,
                                            config.y_cap_constant), root)
        if cert.resolves(config.q_max):
            return cert
        candidates.append(cert)

    c, h = order.constant, IntPoly.constant(1)
    for factor in order.factors:
        c_i, h_i = gcd_bound_multiplier(F, factor)
        c *= c_i
        h = h * h_i
    candidates.append(BoundCertificate(
        'factorwise', c, h,
        _blockwise_cutoff(numerator, d, c, h, root, config.y_cap_constant),
        root))

    def rank(cert: BoundCertificate):
        limit = cert.q_limit
        return (limit is None, limit if limit is not None else 0)

    return min(candidates, key=rank)


def bound_stage(case: Case,
                config: SieveConfig = DEFAULT_CONFIG) -> BoundCertificate:
    """
    Certify ``gcd(d(v-1), |H|) | c * h(s)`` for a polynomial case.

    The certificate of the whole subgroup order is tried first; when it is
    too large to compute or its cutoff lies beyond ``q_max`` the product of
    one certificate per order factor is used instead.

    :raises DomainError: for fixed-q rows
    """
    if isinstance(case, ParabolicCase):
        if case.route == RANK3:
            return _subdegree_certificate(case, config)
        if case.route == P_POWER:
            return _p_part_certificate(case, config)
        return _gcd_certificate(case.index, 1, case.order, 1, config)

    if not case.polynomial:
        raise DomainError('{} is a fixed-q row'.format(case.id))
    index = case.index
    return _gcd_certificate(index.numerator, index.denominator, case.order,
                            case.root, config)


def _p_part_certificate(case: ParabolicCase,
                        config: SieveConfig) -> BoundCertificate:
    # p_part(v-1) <= |c_e| q^e once q > |c_e|
    e, c_e = (case.index - 1).lowest_term()
    c_e = abs(int(c_e))
    penalty = IntPoly.monomial(2 * e, config.y_cap_constant * c_e * c_e)
    bound = _majorant_cutoff(case.index, penalty)
    cutoff = None if bound is None else max(c_e, bound)
    return BoundCertificate('p-part', c_e, IntPoly.monomial(e), cutoff)


def _subdegree_certificate(case: ParabolicCase,
                           config: SieveConfig) -> BoundCertificate:
    assert case.subdegree is not None
    c, h = gcd_bound_multiplier(case.index - 1, case.subdegree)
    penalty = h * h * (config.y_cap_constant * c * c)
    return BoundCertificate('subdegree', c, h,
                            _majorant_cutoff(case.index, penalty))


# --- Stages ------------------------------------------------------------------

@dataclass(frozen=True)
class StageOutcome:
    """
    What one stage concluded at one ``q``.

    An eliminated outcome of the gcd stages keeps ``v`` and the right-hand
    side ``18 a^2`` it was compared against.
    """
    stage: str
    eliminated: bool
    q: int
    v: int
    a: Optional[int] = None
    bound: Optional[int] = None
    params: Tuple[DesignParams, ...] = ()
    annotations: Tuple[str, ...] = ()


def _check(stage: str, q: int, v: int, a: int,
           config: SieveConfig) -> StageOutcome:
    bound = config.y_cap_constant * a * a
    if v > bound:
        return StageOutcome(stage, True, q, v, a=a, bound=bound)

    params = tuple(param_search(v, config.y_values, r_divisor=a))
    return StageOutcome('param-search', not params, q, v, a=a, bound=bound,
                        params=params)


def q_feasible(case: SubgroupCase, certificate: BoundCertificate,
               q_max: int, y_cap: int = 18) -> List[PrimePower]:
    """
    Every ``q <= min(q_max, cutoff)`` with
    ``v(q) <= y_cap * (c * h(s) * |Out|)^2``.
    """
    limit = q_max
    if certificate.q_limit is not None:
        limit = min(limit, certificate.q_limit)

    index = case.index
    found = []
    for pp in case.field_sizes(limit):
        s = case.subfield(pp)
        v = index(s)
        rhs = certificate.bound(s, out_order(case.family, pp))
        if v <= y_cap * rhs * rhs:
            found.append(pp)
    return found


def exact_stage(case: SubgroupCase, q: Union[int, PrimePower],
                config: SieveConfig = DEFAULT_CONFIG) -> StageOutcome:
    """
    Compare ``v`` with ``18 a^2`` for ``a = gcd(v - 1, |H| * |Out(X)|)`` and
    search for parameters when the inequality holds.
    """
    pp = q if isinstance(q, PrimePower) else PrimePower.of(q)
    v = case.v_at(pp)
    a = gcd(v - 1, case.subgroup_order_at(pp) * out_order(case.family, pp))
    return _check('exact-gcd', pp.q, v, a, config)


# --- Pipelines ---------------------------------------------------------------

def _entry(case: Case, stage: str, verdict: str, **kwargs) -> ReportEntry:
    return ReportEntry(case_id=case.id, family=case.family,
                       subgroup=case.subgroup, stage=stage, verdict=verdict,
                       **kwargs)


def _outcome_entry(case: Case, outcome: StageOutcome,
                   notes: Tuple[str, ...] = ()) -> ReportEntry:
    verdict = ELIMINATED if outcome.eliminated else SURVIVOR
    return _entry(case, outcome.stage, verdict, q=outcome.q, a=outcome.a,
                  params=tuple(tuple(p) for p in outcome.params),
                  annotations=outcome.annotations + notes)


def _case_verdict(per_q: List[ReportEntry], resolved: bool) -> str:
    if any(e.verdict == SURVIVOR for e in per_q):
        return SURVIVOR
    return ELIMINATED if resolved else UNRESOLVED


def _feasible_note(qs: Iterable[PrimePower]) -> str:
    values = [str(pp.q) for pp in qs]
    return 'feasible q: {}'.format(', '.join(values) if values else 'none')


def _certificate_notes(cert: BoundCertificate, q_max: int) -> Tuple[str, ...]:
    notes = ['certificate: {}'.format(cert.method)]
    if cert.cutoff is None:
        notes.append('the index does not outgrow the bound')
    else:
        notes.append('scan limit q <= {}'.format(cert.q_limit))
        if not cert.resolves(q_max):
            notes.append('scan limit exceeds q_max = {}'.format(q_max))
    return tuple(notes)


def _routed(case: Case, stage: str, **kwargs) -> List[ReportEntry]:
    target = SPECIAL_TARGETS[case.id]
    notes = case.annotations + kwargs.pop('annotations', ()) + \
        (ROUTE_PREFIX + target,)
    return [_entry(case, stage, ROUTED, annotations=notes, **kwargs)]


def run_case(case: Case,
             config: SieveConfig = DEFAULT_CONFIG) -> List[ReportEntry]:
    """
    Run every stage on one case.

    :returns: The case-level entry followed by one entry per field size that
              reached the exact stage
    """
    if isinstance(case, ParabolicCase):
        return run_parabolic(case, config)

    if not case.polynomial:
        per_q = [_outcome_entry(case, exact_stage(case, pp, config))
                 for pp in case.field_sizes(config.q_max)]
        verdict = _case_verdict(per_q, resolved=True)
        return [_entry(case, 'exact-gcd', verdict,
                       annotations=case.annotations)] + per_q

    cert = bound_stage(case, config)
    head = dict(h=str(cert.h), c=cert.c)
    notes = _certificate_notes(cert, config.q_max)

    if case.route == SPECIAL:
        return _routed(case, 'symbolic-bound', annotations=notes, **head)

    if not cert.dominant:
        return [_entry(case, 'symbolic-bound', UNRESOLVED,
                       annotations=case.annotations + notes, **head)]

    feasible = q_feasible(case, cert, config.q_max, config.y_cap_constant)
    per_q = [_outcome_entry(case, exact_stage(case, pp, config))
             for pp in feasible]
    verdict = _case_verdict(per_q, cert.resolves(config.q_max))
    notes += (_feasible_note(feasible),)
    return [_entry(case, 'symbolic-bound', verdict,
                   annotations=case.annotations + notes, **head)] + per_q


def _scan(case: ParabolicCase, cert: BoundCertificate, config: SieveConfig,
          gcd_at: Callable[[PrimePower, int], int],
          stage: str) -> Tuple[List[PrimePower], List[ReportEntry]]:
    limit = config.q_max
    if cert.q_limit is not None:
        limit = min(limit, cert.q_limit)

    feasible, entries = [], []
    for pp in case.field_sizes(limit):
        v = case.v_at(pp)
        a = gcd_at(pp, v)
        if v > config.y_cap_constant * a * a:
            continue
        feasible.append(pp)

        if not valid_q(case.family, pp):
            note = '{}({}) is not simple'.format(case.family, pp.q)
            entries.append(_entry(case, stage, ELIMINATED, q=pp.q, a=a,
                                  annotations=(note,)))
            continue
        entries.append(_outcome_entry(case, _check(stage, pp.q, v, a,
                                                   config)))
    return feasible, entries


def run_parabolic(case: ParabolicCase,
                  config: SieveConfig = DEFAULT_CONFIG) -> List[ReportEntry]:
    """
    Run a maximal parabolic case along its route.

    * ``p-power``: ``r / (r, lambda)`` divides the p-part of ``v - 1``,
    * ``rank3``: it divides ``gcd(v - 1, d1)`` for the subdegree ``d1``,
    * ``gcd``: the generic pipeline on the parabolic order,
    * ``special``: handed over to the closed-form analysis.
    """
    if case.route == SPECIAL:
        return _routed(case, 'p-part')

    cert = bound_stage(case, config)
    head = dict(h=str(cert.h), c=cert.c)
    notes = _certificate_notes(cert, config.q_max)

    if case.route == P_POWER:
        stage = 'p-part'

        def gcd_at(pp: PrimePower, v: int) -> int:
            return p_part(v - 1, pp.p)
    elif case.route == RANK3:
        stage = 'exact-gcd'
        subdegree = case.subdegree
        assert subdegree is not None

        def gcd_at(pp: PrimePower, v: int) -> int:
            return gcd(v - 1, subdegree(pp.q))
    elif case.route == GCD:
        stage = 'exact-gcd'

        def gcd_at(pp: PrimePower, v: int) -> int:
            return gcd(v - 1, case.order(pp.q) * out_order(case.family, pp))
    else:
        raise DomainError('unknown route {!r}'.format(case.route))

    top = 'p-part' if case.route == P_POWER else 'symbolic-bound'
    if not cert.dominant:
        return [_entry(case, top, UNRESOLVED,
                       annotations=case.annotations + notes, **head)]

    feasible, per_q = _scan(case, cert, config, gcd_at, stage)
    verdict = _case_verdict(per_q, cert.resolves(config.q_max))
    notes += (_feasible_note(feasible),)
    return [_entry(case, top, verdict,
                   annotations=case.annotations + notes, **head)] + per_q
