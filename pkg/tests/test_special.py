from math import gcd

import pytest

from qsdesign.errors import DomainError
from qsdesign.exactmath import PrimePower, p_part
from qsdesign.report import ELIMINATED
from qsdesign.sieve import param_search
from qsdesign.special import G2_VARIANTS, SPECIAL_CASE_IDS, G2Variant, \
    QuadraticCandidate, borel_branches, branch_divisor_bound, g2_a2_check, \
    g2_branch_bound, g2_branches, g2_divisor, g2_index, \
    quadratic_case_solver, ree_check, run_special, special_cases, \
    suzuki_check, _branch_survivors, _field_power


@pytest.mark.parametrize('m,a,y,bound,expected', [
    (2, 4, 5, 15, [QuadraticCandidate(k=15, multiplier=4, value=176)]),
    (1, 3, 4, 16, [QuadraticCandidate(k=16, multiplier=3, value=189)]),
    (1, 9, 10, 100, [QuadraticCandidate(k=100, multiplier=9, value=8991)]),
])
def test_quadratic_case_solver(m, a, y, bound, expected):
    assert quadratic_case_solver(m, a, y, bound) == expected


def test_quadratic_case_solver_invalid():
    with pytest.raises(DomainError):
        quadratic_case_solver(0, 4, 5, 15)
    with pytest.raises(DomainError):
        quadratic_case_solver(1, 4, 1, 15)


def test_candidate_power():
    assert QuadraticCandidate(15, 4, 176).power == 44
    assert QuadraticCandidate(16, 3, 189).power == 63
    assert QuadraticCandidate(16, 4, 189).power is None


def test_branch_divisor_bound():
    assert branch_divisor_bound(1, 3, 4, 3) == 16
    assert branch_divisor_bound(1, 9, 10, 3) == 100
    assert branch_divisor_bound(2, 4, 5, 2) == 30
    assert branch_divisor_bound(2, 8, 9, 2) == 90


def test_suzuki_branch():
    bound = branch_divisor_bound(2, 8, 9, 2)
    assert quadratic_case_solver(2, 8, 9, bound) == [
        QuadraticCandidate(k=45, multiplier=8, value=1792)]
    assert quadratic_case_solver(2, 8, 9, bound)[0].power == 224

    assert quadratic_case_solver(6, 8, 9,
                                 branch_divisor_bound(6, 8, 9, 2)) == []


@pytest.mark.parametrize('p,exponent', [(2, 2), (3, 3)])
def test_candidates_solve_the_quadratic(p, exponent):
    for y in range(2, 11):
        a = p_part(y - 1, p)
        for m in range(1, a + 1):
            bound = branch_divisor_bound(m, a, y, p)
            for cand in quadratic_case_solver(m, a, y, bound):
                k = cand.k
                assert bound % k == 0
                assert k % y == 0 and k > y
                assert m * k * k - (2 * m + a) * k + m + a * y \
                    == m * cand.value


def test_borel_branches_close():
    suzuki = borel_branches(2, 2, '2B2', range(2, 11))
    assert suzuki.closed
    assert suzuki.survivors == ()
    assert any('k=45: 8W = 1792' in note for note in suzuki.notes)

    ree = borel_branches(3, 3, '2G2', range(2, 11))
    assert ree.closed
    assert any('W = 63 is not q^3' in note for note in ree.notes)


def test_field_power():
    assert _field_power(27 ** 3, 3, '2G2') == PrimePower.of(27)
    assert _field_power(27, 3, '2G2') is None
    assert _field_power(63, 3, '2G2') is None
    assert _field_power(64, 2, '2B2') == PrimePower.of(8)
    assert _field_power(1, 2, '2B2') is None


def test_g2_divisor_and_index():
    three = PrimePower.of(3)
    four = PrimePower.of(4)
    assert g2_divisor(1, three) == 13
    assert g2_divisor(-1, three) == 14
    assert g2_divisor(1, four) == 63
    assert g2_divisor(-1, four) == 195

    assert g2_index(1, three) == 378
    assert g2_index(-1, three) == 351


def test_g2_variant_polynomials():
    for variant in G2_VARIANTS:
        for pp in variant.field_sizes(32 ** 3):
            cube = pp.q ** 3
            assert (pp.p == 2) == variant.even
            assert variant.index(cube) == g2_index(variant.eps, pp)
            assert variant.divisor(cube) == g2_divisor(variant.eps, pp)

    assert str(G2Variant(-1, True)) == 'eps=-, q even'
    assert [pp.q for pp in G2Variant(1, False).field_sizes(125)] == [3, 5]
    assert G2Variant(1, True).field_sizes(63) == []


@pytest.mark.parametrize('variant,u,y,expected', [
    (G2Variant(1, False), 1, 3, (138, 'integral b forces k | 72')),
    (G2Variant(1, True), 2, 3, (138, 'integral b forces k | 72')),
    (G2Variant(-1, False), 1, 2, (18, 'integral lambda forces M(Q) | 4')),
    (G2Variant(-1, False), 3, 10, (10, 'lambda <= y')),
])
def test_g2_branch_bound(variant, u, y, expected):
    assert g2_branch_bound(variant, u, y) == expected


def test_g2_branch_bound_window():
    for y in (2, 4, 5, 10):
        assert g2_branch_bound(G2Variant(1, False), 1, y)[1] \
            == 'v-1 outside the window'
    for y in range(6, 9):
        assert g2_branch_bound(G2Variant(1, False), 2, y)[1] == 'lambda <= y'


def test_g2_u1_branch_at_small_q():
    # q = 3: k = 30 does not divide 72, q = 5: k = 128
    assert _branch_survivors(G2Variant(1, False), 1, 3, 138) == []


@pytest.mark.parametrize('variant,u0', [
    (G2Variant(1, False), 3),
    (G2Variant(1, True), 6),
    (G2Variant(-1, False), 4),
    (G2Variant(-1, True), 19),
])
def test_g2_branches_close(variant, u0):
    result = g2_branches(variant, range(2, 11))
    assert result.closed
    assert result.survivors == ()
    assert not any(note.endswith(': open') for note in result.notes)
    assert result.notes[-1].startswith('{}: u>={} fails'.format(variant, u0))


def test_g2_branch_u3_for_unitary_odd_q():
    notes = g2_branches(G2Variant(-1, False), range(2, 11)).notes
    assert 'eps=-, q odd, u=3, y=10: lambda <= y for Q > 10' in notes


@pytest.mark.parametrize('eps', [1, -1])
def test_g2_a2_check(eps):
    entries = g2_a2_check(eps, q_max=16)
    head = entries[0]
    assert head.stage == 'special'
    assert head.q is None
    assert head.verdict == ELIMINATED
    assert head.annotations[0] == 'scanned 9 field sizes q <= 16'
    assert len(entries) == 1


def test_g2_a2_check_invalid():
    with pytest.raises(DomainError):
        g2_a2_check(0)


def test_suzuki_check():
    entries = suzuki_check(q_max=2 ** 9)
    head = entries[0]
    assert head.case_id == 'S:SUZUKI'
    assert head.verdict == ELIMINATED
    assert head.annotations[0] == 'scanned 4 field sizes q <= 512'


def test_ree_check():
    entries = ree_check(q_max=3 ** 5)
    head = entries[0]
    assert head.case_id == 'S:REE'
    assert head.verdict == ELIMINATED
    assert head.annotations[0] == 'scanned 2 field sizes q <= 243'
    assert 'y=4, m=1, k=16: reading q^3 = 189 is impossible as well' \
        in head.annotations


def test_run_special(small_config):
    for case_id in SPECIAL_CASE_IDS:
        entries = run_special(case_id, small_config)
        assert entries[0].case_id == case_id
        assert entries[0].verdict == ELIMINATED

    with pytest.raises(DomainError):
        run_special('S:E8', small_config)


def test_special_cases():
    assert [case.id for case in special_cases()] == list(SPECIAL_CASE_IDS)
    suzuki = [case for case in special_cases() if case.id == 'S:SUZUKI'][0]
    assert [pp.q for pp in suzuki.field_sizes(128)] == [8, 32, 128]
    assert suzuki.index(PrimePower.of(8)) == 65


@pytest.mark.parametrize('v,divisor', [
    (65, 64),         # Suzuki, q = 8
    (378, 13),        # G2 on SL3(3).2
    (19684, 19683),   # Ree, q = 27
])
def test_param_search_with_divisor_matches_brute_force(brute_force, v,
                                                       divisor):
    expected = {params for params in brute_force(v)
                if divisor % (params.r // gcd(params.r, params.lam)) == 0}
    found = param_search(v, range(2, 11), r_divisor=divisor)

    assert set(found) == expected
    assert found == []


@pytest.mark.parametrize('p,exponents', [(2, range(2, 9)), (3, range(1, 6))])
def test_borel_block_sizes_keep_p_part(brute_force, p, exponents):
    # r | lambda (v - 1) makes p | r, so (y-1)(r-1) = (k-1)(lambda-1)
    # gives (k-1)_p <= (y-1)_p
    for e in exponents:
        v = p ** e + 1
        for params in brute_force(v):
            if (params.lam * (v - 1)) % params.r:
                continue
            assert p_part(params.k - 1, p) <= p_part(params.y - 1, p)
