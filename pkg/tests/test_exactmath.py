import pickle
import random
from fractions import Fraction
from math import gcd

import pytest

from qsdesign.errors import DomainError
from qsdesign.exactmath import IntPoly, PrimePower, RatPoly, binomial, \
    ceil_root, divisors_sorted, eval_poly, gcd_bound_multiplier, p_part, \
    poly_product, poly_xgcd, positive_root_cutoff, powers_of, \
    prime_power_stream, prime_powers_upto
from qsdesign.queries import PowerQuery

q = IntPoly.q()


def random_poly(rng, degree):
    coeffs = [rng.randint(-9, 9) for _ in range(degree)] + [rng.randint(1, 5)]
    return IntPoly(coeffs)


def test_str():
    assert str(IntPoly([1, 0, 0, 0, 1, 0, 0, 0, 1])) == 'q^8+q^4+1'
    assert str(IntPoly([-1, 3, -1])) == '-q^2+3*q-1'
    assert str(IntPoly()) == '0'
    assert str(IntPoly([-5])) == '-5'
    assert repr(q + 1) == 'IntPoly(q+1)'


def test_trailing_zeros_are_dropped():
    assert IntPoly([1, 2, 0, 0]) == IntPoly([1, 2])
    assert IntPoly([0, 0]).is_zero()
    assert IntPoly().degree == -1


def test_immutable():
    poly = q + 1
    with pytest.raises(AttributeError):
        poly.coeffs = (1,)


def test_invalid_coefficients():
    with pytest.raises(DomainError):
        IntPoly([Fraction(1, 2)])
    with pytest.raises(DomainError):
        IntPoly([True])
    with pytest.raises(DomainError):
        IntPoly.monomial(-1)

    assert IntPoly([Fraction(4, 2)]) == IntPoly([2])


def test_arithmetic():
    assert (q + 1) ** 3 == IntPoly([1, 3, 3, 1])
    assert str((q + 1) ** 3) == 'q^3+3*q^2+3*q+1'
    assert (q - 1) * (q + 1) == q ** 2 - 1
    assert 1 - q == IntPoly([1, -1])
    assert 3 * q == IntPoly([0, 3])
    assert (q ** 2 + q) - q == q ** 2
    assert (q * 0).is_zero()


def test_rational_lift():
    half = q * Fraction(1, 2)
    assert isinstance(half, RatPoly)
    assert isinstance(q + q, IntPoly)
    assert isinstance(q + RatPoly([1]), RatPoly)
    assert (half + half) == q


def test_eval():
    poly = IntPoly([1, 0, 0, 0, 1, 0, 0, 0, 1])
    assert poly(2) == 273
    assert poly(3) == 6643
    assert isinstance(poly(2), int)
    assert RatPoly([Fraction(1, 2), Fraction(1, 2)])(3) == 2


def test_divrem():
    quot, rem = (q ** 3 - 1).divrem(q - 1)
    assert quot == q ** 2 + q + 1
    assert rem.is_zero()
    assert isinstance(quot, IntPoly)

    quot, rem = (q ** 2 + 1).divrem(q + 1)
    assert quot == q - 1
    assert rem == 2

    quot, rem = (q ** 2).divrem(2 * q)
    assert isinstance(quot, RatPoly)
    assert quot == RatPoly([0, Fraction(1, 2)])
    assert rem.is_zero()


def test_divrem_smaller_degree():
    quot, rem = (q + 1).divrem(q ** 2)
    assert quot.is_zero()
    assert rem == q + 1


def test_division_by_zero():
    with pytest.raises(DomainError):
        (q + 1).divrem(IntPoly())


def test_exact_div():
    assert (q ** 4 + q ** 2 + 1).exact_div(q ** 2 + q + 1) == q ** 2 - q + 1

    quot = (2 * q ** 2).exact_div(2 * q)
    assert isinstance(quot, IntPoly)
    assert quot == q

    with pytest.raises(DomainError):
        (q ** 2 + 1).exact_div(q - 1)


def test_compose_power():
    assert (q ** 2 + q + 1).compose_power(3) == IntPoly(
        [1, 0, 0, 1, 0, 0, 1])
    assert (q + 1).compose_power(1) == q + 1
    with pytest.raises(DomainError):
        q.compose_power(0)


def test_eval_poly():
    phi = q ** 8 + q ** 4 + 1
    assert eval_poly(phi, 2) == 273
    assert type(eval_poly(phi, 2)) is int
    assert eval_poly(IntPoly([]), 5) == 0

    half = RatPoly([Fraction(1, 2), Fraction(1, 2)])
    assert eval_poly(half, 3) == 2
    assert type(eval_poly(half, 3)) is int
    assert eval_poly(half, 2) == Fraction(3, 2)


def test_binomial():
    assert binomial(3) == q ** 3 - 1
    assert binomial(3, -1) == q ** 3 + 1
    assert poly_product([binomial(1), binomial(1, -1)]) == binomial(2)


def test_lowest_term():
    assert IntPoly([0, 0, 3, 1]).lowest_term() == (2, 3)
    assert IntPoly([-1, 1]).lowest_term() == (0, -1)
    with pytest.raises(DomainError):
        IntPoly().lowest_term()


def test_content_and_monic():
    assert IntPoly([4, 6, -8]).content() == 2
    assert IntPoly().content() == 0
    assert RatPoly([2, 4]).monic() == RatPoly([Fraction(1, 2), 1])
    assert RatPoly([Fraction(1, 2), Fraction(1, 3)]).denominator() == 6


def test_pickle():
    poly = q ** 8 + q ** 4 + 1
    assert pickle.loads(pickle.dumps(poly)) == poly
    assert type(pickle.loads(pickle.dumps(poly))) is IntPoly


def test_xgcd_common_factor():
    cert = poly_xgcd(q ** 2 - 1, q ** 2 + q)
    assert cert.h == q + 1
    assert cert.verify(q ** 2 - 1, q ** 2 + q)


def test_xgcd_coprime():
    cert = poly_xgcd(q + 1, q - 1)
    assert cert.h == 1
    assert cert.s == RatPoly([Fraction(1, 2)])
    assert cert.t == RatPoly([Fraction(-1, 2)])
    assert cert.c == 2


def test_xgcd_with_zero():
    cert = poly_xgcd(2 * q + 2, IntPoly())
    assert cert.h == q + 1
    assert cert.verify(2 * q + 2, IntPoly())

    with pytest.raises(DomainError):
        poly_xgcd(IntPoly(), IntPoly())


def test_xgcd_random():
    rng = random.Random(20240611)
    for _ in range(25):
        common = random_poly(rng, rng.randint(0, 3))
        F = common * random_poly(rng, rng.randint(1, 5))
        G = common * random_poly(rng, rng.randint(1, 5))
        cert = poly_xgcd(F, G)

        assert cert.verify(F, G)
        assert cert.h.lc == 1
        assert F.divrem(cert.h)[1].is_zero()
        assert G.divrem(cert.h)[1].is_zero()
        assert cert.h.degree >= common.degree

        F_h = F.divrem(cert.h)[0]
        G_h = G.divrem(cert.h)[0]
        if F_h.degree > 0 and G_h.degree > 0:
            assert cert.s.degree < G_h.degree
            assert cert.t.degree < F_h.degree


def test_gcd_bound_multiplier():
    assert gcd_bound_multiplier(q + 1, q - 1) == (2, IntPoly([1]))
    assert gcd_bound_multiplier(IntPoly.monomial(2), IntPoly.monomial(3)) \
        == (1, q ** 2)


@pytest.mark.parametrize('F,G', [
    (q ** 2 + q + 1, q - 1),
    (q ** 4 + 1, q ** 2 + 1),
    (q ** 8 + q ** 4 + 1, q ** 6 - 1),
    (q ** 3 * (q ** 2 + 1), 3 * q ** 2 - 12),
])
def test_gcd_bound_multiplier_divides(F, G):
    c, h = gcd_bound_multiplier(F, G)
    for q0 in range(2, 300):
        g = gcd(F(q0), G(q0))
        assert (c * h(q0)) % g == 0


def test_gcd_bound_multiplier_random():
    rng = random.Random(549)
    checked = 0
    while checked < 1000:
        common = random_poly(rng, rng.randint(0, 2))
        F = common * random_poly(rng, rng.randint(1, 4))
        G = common * random_poly(rng, rng.randint(0, 4))
        c, h = gcd_bound_multiplier(F, G)

        for _ in range(10):
            q0 = rng.randint(2, 10 ** 6)
            g = gcd(F(q0), G(q0))
            if g == 0:
                continue
            assert (c * h(q0)) % g == 0, (F, G, q0)
            checked += 1


def test_p_part():
    assert p_part(96, 2) == 32
    assert p_part(-12, 2) == 4
    assert p_part(7, 3) == 1

    with pytest.raises(DomainError):
        p_part(0, 2)
    with pytest.raises(DomainError):
        p_part(12, 4)


def test_ceil_root():
    assert ceil_root(27, 3) == 3
    assert ceil_root(28, 3) == 4
    assert ceil_root(0, 2) == 0
    assert ceil_root(1, 5) == 1
    assert ceil_root(10 ** 40 + 1, 2) == 10 ** 20 + 1


def test_positive_root_cutoff():
    assert positive_root_cutoff(q ** 2 - 3 * q - 10) == 8
    assert positive_root_cutoff(q ** 2 + 1) == 0

    with pytest.raises(DomainError):
        positive_root_cutoff(1 - q ** 2)
    with pytest.raises(DomainError):
        positive_root_cutoff(IntPoly())


def test_positive_root_cutoff_random():
    rng = random.Random(7)
    for _ in range(25):
        poly = random_poly(rng, rng.randint(1, 6))
        cutoff = positive_root_cutoff(poly)
        for x in range(cutoff + 1, cutoff + 40):
            assert poly(x) > 0


def test_prime_power():
    assert PrimePower.of(32) == PrimePower(q=32, p=2, f=5)
    assert PrimePower.of(7) == PrimePower(q=7, p=7, f=1)
    assert int(PrimePower.of(9)) == 9
    assert str(PrimePower.of(9)) == '9'
    assert PrimePower.of(8) < PrimePower.of(9)

    for bad in (0, 1, 6, 12, 100):
        with pytest.raises(DomainError):
            PrimePower.of(bad)


def test_prime_power_root():
    assert PrimePower.of(64).root(3) == PrimePower(q=4, p=2, f=2)
    assert PrimePower.of(27).root(3) == PrimePower(q=3, p=3, f=1)
    with pytest.raises(DomainError):
        PrimePower.of(32).root(2)


def test_prime_powers_upto():
    assert [pp.q for pp in prime_powers_upto(32)] == [
        2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
    assert prime_powers_upto(1) == ()


def test_prime_power_stream():
    Q = PowerQuery()
    assert [pp.q for pp in prime_power_stream(Q.p == 3, 100)] == [3, 9, 27, 81]
    assert len(list(prime_power_stream(None, 32))) == 18


def test_powers_of():
    Q = PowerQuery()
    assert [pp.q for pp in powers_of(2, 100, Q.f.odd())] == [2, 8, 32]
    assert [pp.f for pp in powers_of(3, 100)] == [1, 2, 3, 4]


def test_divisors_sorted():
    assert divisors_sorted(72) == [1, 2, 3, 4, 6, 8, 9, 12, 18, 24, 36, 72]
