import pytest

from qsdesign.catalog import E6_SUBDEGREES, GCD, P_POWER, RANK3, SPECIAL, \
    Index, ParabolicCase, SubgroupCase, all_cases, case_index, get_case, \
    nonparabolic_cases, parabolic_cases, parabolic_index
from qsdesign.errors import CatalogError, DomainError, UnknownCaseError
from qsdesign.exactmath import IntPoly, binomial
from qsdesign.groups import order_of, out_order, universal_order

q = IntPoly.q()
PHI = IntPoly([1, 0, 0, 0, 1, 0, 0, 0, 1])


def test_ids_are_unique_and_sorted():
    ids = [case.id for case in all_cases()]
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))
    assert len(ids) == len(nonparabolic_cases()) + len(parabolic_cases())


def test_get_case():
    case = get_case('F4:3D4')
    assert isinstance(case, SubgroupCase)
    assert case.family == 'F4'
    assert case.subgroup == '3D4(q)'

    assert isinstance(get_case('P:E6:1'), ParabolicCase)


def test_unknown_case():
    with pytest.raises(UnknownCaseError) as exc:
        get_case('F4:nothing')
    assert str(exc.value) == 'unknown case: F4:nothing'

    # Also a KeyError so mapping-style callers can catch it
    with pytest.raises(KeyError):
        get_case('S:SUZUKI')


def test_f4_3d4_index():
    index = get_case('F4:3D4').index
    assert index.numerator == q ** 12 * binomial(8) * binomial(4)
    assert index.denominator == 3
    assert str(index) == '({})/3'.format(index.numerator)
    assert get_case('F4:3D4').v_at(2) == 5222400


def test_polynomial_indices_match_group_orders():
    for case in nonparabolic_cases():
        if not case.polynomial:
            continue
        group = universal_order(case.family)
        for pp in case.field_sizes(2 ** 12)[:3]:
            v = case.v_at(pp)
            assert v > 1
            assert v * case.subgroup_order_at(pp) == group(pp.q)


def test_fixed_rows():
    case = get_case('G2:J2')
    assert not case.polynomial
    assert case.v_at(4) == 416
    assert case_index(case) == {4: 416}
    assert [pp.q for pp in case.field_sizes(100)] == [4]
    assert case.subgroup_order_at(4) == 604800

    with pytest.raises(DomainError):
        _ = case.index
    with pytest.raises(DomainError):
        case.v_at(5)


def test_fixed_rows_divide():
    for case in nonparabolic_cases():
        for field, order in case.fixed:
            assert order_of(case.family, field) % order == 0


#: Listed rows that are not large at these q
NOT_LARGE = {
    'F4:A1G2': {5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43,
                47, 49},
    'G2:2^3.L3(2)': {5},
}


def is_large(case, pp):
    # (|X| / v * |Out|)^3 >= |X|, multiplied through by v^3
    group = order_of(case.family, pp)
    v = case.v_at(pp)
    return group ** 2 * out_order(case.family, pp) ** 3 >= v ** 3


def test_rows_are_large():
    for case in nonparabolic_cases():
        for pp in case.field_sizes(50):
            if pp.q in NOT_LARGE.get(case.id, ()):
                assert not is_large(case, pp), (case.id, pp.q)
            else:
                assert is_large(case, pp), (case.id, pp.q)


def test_rows_that_are_not_large_say_so():
    for case_id in NOT_LARGE:
        assert any(note.startswith('not large')
                   for note in get_case(case_id).annotations)


def test_field_sizes():
    assert [pp.q for pp in get_case('2B2:C4').field_sizes(10)] == [8]
    assert [pp.q for pp in get_case('2B2:2B2(q^1/3)').field_sizes(2 ** 10)] \
        == [512]
    assert [pp.q for pp in get_case('F4:A1C3').field_sizes(10)] == [3, 5, 7, 9]
    assert [pp.q for pp in get_case('F4:C4').field_sizes(10)] == [2, 4, 8]
    assert [pp.q for pp in get_case('G2:A1A1').field_sizes(5)] == [3, 4, 5]


def test_subfield_rows():
    case = get_case('2B2:2B2(q^1/3)')
    assert case.root == 3
    assert case.subfield(case.field_sizes(2 ** 10)[0]) == 8
    order = universal_order('2B2')
    assert case.v_at(512) == order(512) // order(8)


def test_routes():
    assert get_case('G2:A2+').route == SPECIAL
    assert get_case('G2:A2-').route == SPECIAL
    assert get_case('P:2B2').route == SPECIAL
    assert get_case('P:2G2').route == SPECIAL
    assert get_case('P:E6:1').route == RANK3
    assert get_case('P:E6:6').route == RANK3
    assert get_case('P:E6:3').route == GCD
    assert get_case('P:E6:5').route == GCD
    assert get_case('P:E6:2').route == P_POWER
    assert get_case('P:F4:1').route == P_POWER


def test_e6_rank3_subdegrees():
    index = get_case('P:E6:1').index
    assert index == (PHI * binomial(9)).exact_div(binomial(1))
    assert 1 + E6_SUBDEGREES[0] + E6_SUBDEGREES[1] == index
    assert E6_SUBDEGREES[0](2) == 4590
    assert get_case('P:E6:1').annotations


@pytest.mark.parametrize('family,node,expected', [
    ('2B2', '', q ** 2 + 1),
    ('2G2', '', q ** 3 + 1),
    ('3D4', '2', (q + 1) * PHI),
    ('3D4', '134', (q ** 3 + 1) * PHI),
    ('2F4', '14', (q + 1) * (q ** 3 + 1) * (q ** 6 + 1)),
    ('G2', 1, IntPoly([1] * 6)),
])
def test_parabolic_index(family, node, expected):
    assert parabolic_index(family, node) == expected


def test_parabolic_index_unknown():
    with pytest.raises(DomainError):
        parabolic_index('E6', 'x')
    with pytest.raises(DomainError):
        parabolic_index('E6', 7)
    with pytest.raises(DomainError):
        parabolic_index('3D4', '9')
    with pytest.raises(DomainError):
        parabolic_index('A2', '1')


def test_parabolic_cases():
    case = get_case('P:E6:1')
    assert case.subgroup == 'P1 (D5)'
    assert case.v_at(2) == 139503
    assert case.order(2) * case.v_at(2) == universal_order('E6')(2)

    for case in parabolic_cases():
        group = universal_order(case.family)
        assert case.order.poly() * case.index == group.poly()


def test_parabolic_field_sizes():
    assert [pp.q for pp in get_case('P:2B2').field_sizes(40)] == [2, 8, 32]
    assert [pp.q for pp in get_case('P:G2:1').field_sizes(5)] == [2, 3, 4, 5]


def test_index_evaluation():
    index = Index(q + 1, 3)
    assert index(2) == 1
    assert str(index) == '(q+1)/3'
    assert str(Index(q + 1)) == 'q+1'
    assert index.degree == 1
    with pytest.raises(CatalogError):
        index(3)
