from math import gcd

import pytest

from qsdesign.catalog import get_case
from qsdesign.errors import DomainError
from qsdesign.exactmath import IntPoly, PrimePower
from qsdesign.groups import out_order
from qsdesign.report import ELIMINATED, ROUTED, UNRESOLVED
from qsdesign.sieve import DEFAULT_CONFIG, BoundCertificate, DesignParams, \
    SieveConfig, bound_stage, design_from_block_size, exact_stage, \
    param_search, q_feasible, run_case

q = IntPoly.q()
PHI = IntPoly([1, 0, 0, 0, 1, 0, 0, 0, 1])


def test_param_search_known_designs():
    assert param_search(12) == [DesignParams(12, 22, 11, 6, 5, 3)]
    assert param_search(22) == [DesignParams(22, 77, 21, 6, 5, 2)]
    assert DesignParams(21, 56, 16, 6, 4, 2) in param_search(21)


def test_param_search_empty():
    assert param_search(7) == []
    assert param_search(4) == []
    assert param_search(12, y_values=[2]) == []


def test_param_search_invalid_y():
    with pytest.raises(DomainError):
        param_search(12, y_values=[1, 3])


def test_param_search_r_divisor():
    assert param_search(12, r_divisor=11) == param_search(12)
    assert param_search(12, r_divisor=22) == param_search(12)
    assert param_search(12, r_divisor=10) == []


def test_param_search_sorted():
    found = param_search(21)
    assert found == sorted(found, key=lambda p: (p.k, p.y, p.lam))


def test_param_search_matches_brute_force(brute_force):
    for v in range(5, 81):
        assert set(param_search(v)) == brute_force(v), v


@pytest.mark.slow
def test_param_search_matches_brute_force_large(brute_force):
    for v in range(81, 2001):
        assert set(param_search(v)) == brute_force(v), v


def test_param_search_r_divisor_filters(brute_force):
    for v in range(5, 61):
        everything = brute_force(v)
        for divisor in (1, 2, 6, 10, 30):
            expected = {p for p in everything
                        if divisor % (p.r // gcd(p.r, p.lam)) == 0}
            assert set(param_search(v, r_divisor=divisor)) == expected


def test_design_from_block_size():
    assert design_from_block_size(12, 3, 6) == \
        DesignParams(12, 22, 11, 6, 5, 3)
    assert design_from_block_size(12, 3, 7) is None
    assert design_from_block_size(12, 3, 2) is None
    assert design_from_block_size(12, 3, 11) is None


def test_violations():
    assert DesignParams(12, 22, 11, 6, 5, 3).is_valid
    assert DesignParams(12, 22, 11, 6, 5, 3).violations() == []

    broken = DesignParams(12, 22, 11, 6, 5, 2)
    assert not broken.is_valid
    assert '(y-1)(r-1) = (k-1)(lambda-1)' in broken.violations()


def test_config_defaults():
    config = SieveConfig()
    assert config.q_max == 10 ** 5
    assert config.y_values == tuple(range(2, 11))
    assert config.y_cap_constant == 18
    assert config.workers == 1


def test_config_normalizes_y():
    assert SieveConfig(y_values=(5, 3, 3)).y_values == (3, 5)


@pytest.mark.parametrize('options', [
    {'y_values': (1, 2)},
    {'y_values': ()},
    {'y_cap_constant': 10},
    {'q_max': 1},
    {'workers': 0},
])
def test_config_invalid(options):
    with pytest.raises(DomainError):
        SieveConfig(**options)


def test_config_small_y_allows_smaller_constant():
    assert SieveConfig(y_values=(2, 3), y_cap_constant=4).y_cap_constant == 4


def test_bound_certificate():
    cert = BoundCertificate('full', 2, q + 1, 3, root=2)
    assert cert.dominant
    assert cert.q_limit == 9
    assert not cert.resolves(8)
    assert cert.resolves(9)
    assert cert.bound(3, out=5) == 40

    open_cert = BoundCertificate('factorwise', 1, q, None)
    assert not open_cert.dominant
    assert open_cert.q_limit is None
    assert not open_cert.resolves(10 ** 9)


def test_bound_stage_f4_3d4(f4_3d4):
    cert = bound_stage(f4_3d4)
    assert cert.method == 'full'
    assert cert.c == 549
    assert cert.h == PHI
    assert cert.q_limit == 63
    assert cert.resolves(DEFAULT_CONFIG.q_max)


@pytest.mark.parametrize('case_id', [
    'F4:3D4', 'F4:B4', 'G2:A1A1', '2G2:A1', '3D4:G2', '3D4:A2+',
    '2B2:2B2(q^1/3)',
])
def test_bound_stage_divides(case_id):
    case = get_case(case_id)
    cert = bound_stage(case)
    index, order = case.index, case.order
    for s in range(2, 40):
        g = gcd(index.numerator(s) - index.denominator, order(s))
        assert (cert.c * cert.h(s)) % g == 0


def test_bound_stage_fixed_row():
    with pytest.raises(DomainError):
        bound_stage(get_case('G2:J2'))


def test_bound_stage_p_part():
    cert = bound_stage(get_case('P:G2:1'))
    assert cert.method == 'p-part'
    assert cert.c == 1
    assert cert.h == q
    assert cert.cutoff == 6


def test_bound_stage_subdegree():
    cert = bound_stage(get_case('P:E6:1'))
    assert cert.method == 'subdegree'
    assert cert.h == q ** 5 + q
    assert cert.dominant


def test_q_feasible(f4_3d4):
    cert = bound_stage(f4_3d4)
    feasible = q_feasible(f4_3d4, cert, 10 ** 5)
    assert [pp.q for pp in feasible] == [2, 3, 4, 5, 7, 8, 9]

    for pp in f4_3d4.field_sizes(cert.q_limit):
        rhs = cert.bound(pp.q, out_order('F4', pp))
        assert (f4_3d4.v_at(pp) <= 18 * rhs * rhs) == (pp in feasible)


def test_exact_stage_eliminates_feasible_q(f4_3d4):
    cert = bound_stage(f4_3d4)
    for pp in q_feasible(f4_3d4, cert, 10 ** 5):
        outcome = exact_stage(f4_3d4, pp)
        assert outcome.eliminated, pp.q


def test_exact_stage(f4_3d4):
    outcome = exact_stage(f4_3d4, 2)
    assert outcome.stage == 'exact-gcd'
    assert outcome.eliminated
    assert outcome.v == 5222400
    assert outcome.a == 91
    assert outcome.bound == 18 * 91 * 91


def test_run_case_f4_3d4(f4_3d4):
    entries = run_case(f4_3d4)
    head = entries[0]
    assert head.is_case_level
    assert head.stage == 'symbolic-bound'
    assert head.verdict == ELIMINATED
    assert head.h == str(PHI)
    assert 'certificate: full' in head.annotations
    assert all(e.verdict == ELIMINATED for e in entries)
    assert [e.q for e in entries[1:]] == sorted(e.q for e in entries[1:])


def test_run_case_small_q_max(f4_3d4):
    entries = run_case(f4_3d4, SieveConfig(q_max=4))
    head = entries[0]
    assert head.verdict == UNRESOLVED
    assert 'scan limit exceeds q_max = 4' in head.annotations
    assert all(e.verdict == ELIMINATED for e in entries[1:])


def test_run_case_fixed_row():
    entries = run_case(get_case('G2:J2'))
    assert len(entries) == 2

    head, at_four = entries
    assert head.stage == 'exact-gcd'
    assert head.verdict == ELIMINATED
    assert at_four.q == 4
    assert at_four.a == 5
    assert at_four.stage == 'param-search'
    assert at_four.verdict == ELIMINATED


def test_run_case_routed():
    entries = run_case(get_case('G2:A2+'))
    assert len(entries) == 1
    assert entries[0].verdict == ROUTED
    assert entries[0].routed_to == 'S:G2:A2+'
    assert entries[0].stage == 'symbolic-bound'
    assert entries[0].h is not None

    entries = run_case(get_case('P:2B2'))
    assert entries[0].verdict == ROUTED
    assert entries[0].routed_to == 'S:SUZUKI'
    assert entries[0].stage == 'p-part'
    assert run_case(get_case('P:2G2'))[0].routed_to == 'S:REE'


def test_run_parabolic_not_simple():
    entries = run_case(get_case('P:G2:1'))
    head = entries[0]
    assert head.stage == 'p-part'
    assert head.verdict == ELIMINATED
    assert 'feasible q: 2' in head.annotations

    at_two = entries[1]
    assert at_two.q == 2
    assert at_two.a == 2
    assert at_two.verdict == ELIMINATED
    assert at_two.annotations == ('G2(2) is not simple',)


def test_run_parabolic_rank3():
    entries = run_case(get_case('P:E6:1'))
    head = entries[0]
    assert head.stage == 'symbolic-bound'
    assert head.verdict == ELIMINATED
    assert any(note.startswith('index (q^8+q^4+1)(q^9-1)/(q-1)')
               for note in head.annotations)
    assert 2 not in [e.q for e in entries]


def test_run_case_is_deterministic(f4_3d4):
    assert run_case(f4_3d4) == run_case(f4_3d4)
