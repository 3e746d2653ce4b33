"""Truncated-sum kernels and their identities."""

import random
from fractions import Fraction as F

import pytest

from supercong import (CoeffPoly, KTooLarge, RingSpec, binom_transform, gbinom,
                       hyper_sum, legendre_pn, odd_primes, pn_coeffs, pn_eval,
                       poly_derivative, reduce_rational, sn_eval)
from supercong.oracle import exact_binom, exact_sn

R49 = RingSpec(7, 2)
R25 = RingSpec(5, 2)


def rand_pint(rng, p, dens=(1, 2, 3, 4, 6)):
    while True:
        q = F(rng.randint(-20, 20), rng.choice(dens))
        if q.denominator % p:
            return q


def test_gbinom_examples():
    assert gbinom(F(-1, 2), 0, R49).value == 1
    assert gbinom(F(-1, 2), 2, R49).value == 31
    assert gbinom(F(5), 7, RingSpec(11, 1)).value == 0
    with pytest.raises(KTooLarge):
        gbinom(F(1, 2), 7, R49)


def test_gbinom_matches_exact():
    rng = random.Random(7)
    for p in (5, 7, 11):
        ring = RingSpec(p, 2)
        for _ in range(30):
            a = rand_pint(rng, p)
            k = rng.randint(0, p - 1)
            assert gbinom(a, k, ring) == reduce_rational(exact_binom(a, k), ring)


def test_hyper_sum_examples():
    assert hyper_sum(F(1, 3), F(2), F(0), 6, R49).value == 1
    assert hyper_sum(F(-1, 2), F(-1, 2), F(1), 4, R25).value == 1
    # the (-3|7) = +1 value: sum C(2k,k)C(3k,k)/27^k === 1 mod 49
    assert hyper_sum(F(-1, 3), F(-2, 3), F(1), 6, R49).value == 1


def test_hyper_sum_matches_naive():
    rng = random.Random(11)
    for _ in range(200):
        p = rng.choice(odd_primes(5, 97))
        e = rng.choice((1, 2))
        ring = RingSpec(p, e)
        a, c, z = (rand_pint(rng, p) for _ in range(3))
        n = rng.randint(0, min(p - 1, 12))
        naive = sum((gbinom(a, k, ring) * gbinom(c, k, ring)
                     * reduce_rational(z, ring) ** k for k in range(n + 1)),
                    start=ring.residue(0))
        assert hyper_sum(a, c, z, n, ring) == naive


def test_pn_eval_examples():
    assert pn_eval(F(2, 3), F(1), 6, R49).value == 1
    assert pn_eval(F(1), F(3), 6, R49) == reduce_rational(F(3), R49)
    assert pn_eval(F(-1, 2), F(-1), 4, R25).value == 1


def test_pn_symmetry_in_a():
    rng = random.Random(3)
    for p in (5, 7, 13):
        ring = RingSpec(p, 2)
        for _ in range(20):
            a = rand_pint(rng, p)
            x = rand_pint(rng, p)
            assert pn_eval(a, x, p - 1, ring) == pn_eval(-1 - a, x, p - 1, ring)


def test_pn_coeffs_examples():
    ring = RingSpec(7, 2)
    assert pn_coeffs(F(1), 1, ring).coeffs == (0, 1)
    assert pn_coeffs(F(2), 2, ring).coeffs == (
        reduce_rational(F(-1, 2), ring).value, 0, reduce_rational(F(3, 2), ring).value)
    assert pn_coeffs(F(1, 2), 0, ring).coeffs == (1,)


def test_pn_coeffs_agree_with_eval():
    rng = random.Random(5)
    for p in (5, 7, 11, 13):
        ring = RingSpec(p, 2)
        for a in (F(-1, 2), F(1, 3), F(4), rand_pint(rng, p)):
            if a.denominator % p == 0:
                continue
            poly = pn_coeffs(a, p - 1, ring)
            for x0 in range(p):
                assert poly.evaluate(x0) == pn_eval(a, F(x0), p - 1, ring)


def test_poly_derivative_examples():
    ring = RingSpec(7, 2)
    assert poly_derivative(CoeffPoly((5,), ring)).coeffs == (0,)
    assert poly_derivative(CoeffPoly((0, 1), ring)).coeffs == (1,)
    p2 = pn_coeffs(F(2), 2, ring)
    assert poly_derivative(p2).coeffs == (0, 3)


def test_contiguous_relation_in_ring():
    # (a+1)P_n(a+1,x) - (2a+1)x P_n(a,x) + a P_n(a-1,x)
    #   = -2(2a+1) C(a,n) C(a+n,n) ((x-1)/2)^(n+1)
    rng = random.Random(21)
    for p in (7, 11, 13):
        ring = RingSpec(p, 2)
        for _ in range(20):
            a, x = rand_pint(rng, p), rand_pint(rng, p)
            n = rng.randint(1, p - 1)
            lhs = (pn_eval(a + 1, x, n, ring) * (a + 1)
                   - pn_eval(a, x, n, ring) * ((2 * a + 1) * x)
                   + pn_eval(a - 1, x, n, ring) * a)
            rhs = (gbinom(a, n, ring) * gbinom(a + n, n, ring)
                   * (-2 * (2 * a + 1)) * reduce_rational((x - 1) / 2, ring) ** (n + 1))
            assert lhs == rhs, (p, a, x, n)


def test_reciprocal_partial_sum_identity():
    # sum_{k<=n} C(a,k)C(-1-a,k)/(k+1) = C(a-1,n)C(-2-a,n)/(n+1)
    rng = random.Random(22)
    for p in (5, 7, 13):
        ring = RingSpec(p, 2)
        for _ in range(20):
            a = rand_pint(rng, p)
            n = rng.randint(1, p - 2)
            lhs = sum((gbinom(a, k, ring) * gbinom(-1 - a, k, ring)
                       * reduce_rational(F(1, k + 1), ring) for k in range(n + 1)),
                      start=ring.residue(0))
            rhs = (gbinom(a - 1, n, ring) * gbinom(-2 - a, n, ring)
                   * reduce_rational(F(1, n + 1), ring))
            assert lhs == rhs


def test_sn_examples_and_identities():
    ring7 = RingSpec(7, 1)
    assert sn_eval(F(3), F(5), 6, ring7).value == 3  # C(5,3) = 10 === 3 mod 7
    rng = random.Random(23)
    for p in (5, 7, 11):
        ring = RingSpec(p, 2)
        for _ in range(15):
            a = rand_pint(rng, p)
            n = rng.randint(0, p - 1)
            assert sn_eval(a, 2 * a, n, ring) == hyper_sum(a, a, F(1), n, ring)
            assert sn_eval(a, F(0), 1, ring) == reduce_rational(1 - a * a, ring)
            # contiguous relation in b
            b = rand_pint(rng, p)
            lhs = sn_eval(a, b, n, ring) * (a - b) + sn_eval(a + 1, b, n, ring) * (a + 1)
            rhs = gbinom(a, n, ring) * gbinom(b - a - 1, n, ring) * (2 * a - b + 1)
            assert lhs == rhs


def test_sn_closed_forms_against_exact_oracle():
    rng = random.Random(24)
    for _ in range(40):
        a = F(rng.randint(-15, 15), rng.choice([1, 2, 3, 5]))
        n = rng.randint(1, 20)
        assert exact_sn(a, 0, n) == exact_binom(n + a, n) * exact_binom(n - a, n)
        assert exact_sn(a, 1, n) == (-F(a * a - a - n, n * n)
                                     * exact_binom(a - 2, n - 1) * exact_binom(-a - 1, n - 1))


def test_legendre_pn_examples():
    ring11 = RingSpec(11, 1)
    for n in (0, 1, 2, 5, 9):
        assert legendre_pn(n, F(1), ring11).value == 1
    assert legendre_pn(1, F(4), ring11).value == 4
    assert legendre_pn(2, F(3), ring11).value == 2  # (3*9-1)/2 = 13 === 2 mod 11


def test_legendre_pn_reflection():
    # P_{p-1-m}(x) === P_m(x) mod p for 1 <= m <= (p-1)/2
    for p in (7, 11, 13):
        ring = RingSpec(p, 1)
        for mlow in range(1, (p - 1) // 2 + 1):
            for x in range(p):
                assert legendre_pn(p - 1 - mlow, F(x), ring) == legendre_pn(mlow, F(x), ring)


def test_squared_binomial_reciprocal_relations():
    # sum C(a,k)^2 t^k === t^<a> sum C(a,k)^2 t^-k
    #                 === (t-1)^<a> P_<a>((t+1)/(t-1)) (mod p)
    from supercong import least_residue

    rng = random.Random(25)
    for p in (7, 11, 13):
        ring = RingSpec(p, 1)
        for _ in range(12):
            a = rand_pint(rng, p)
            la = least_residue(a, p)
            if la == 0:
                continue
            t = rand_pint(rng, p)
            tv = reduce_rational(t, ring).value
            if tv == 0:
                continue
            s = hyper_sum(a, a, t, p - 1, ring)
            srec = hyper_sum(a, a, 1 / t, p - 1, ring)
            assert s == srec * pow(tv, la, p)
            if (tv - 1) % p:
                pv = legendre_pn(la, (t + 1) / (t - 1), ring)
                assert s == pv * pow(tv - 1, la, p)


def test_binom_transform_examples():
    ring = RingSpec(11, 2)
    f = [ring.residue(i * i + 3) for i in range(11)]
    assert binom_transform(f, 0, ring) == f[0]
    ones = [ring.residue(1)] * 11
    for k in (1, 2, 5):
        assert binom_transform(ones, k, ring).value == 0
    central = [gbinom(F(2 * k1), k1, ring) * reduce_rational(F(1, 4**k1), ring)
               for k1 in range(11)]
    for k in range(11):
        assert binom_transform(central, k, ring) == central[k]


def test_big_modulus_pure_int_fallback():
    # p^3 above the int64-safe bound routes through the pure-int scans
    from supercong.fastkernel import _NP_SAFE_MODULUS, ModKernel
    from supercong.oracle import ExactKernel

    p = 1297
    mk = ModKernel(p)
    assert mk.tables(3).m >= _NP_SAFE_MODULUS
    got = mk.trunc_sum(F(-1, 2), F(-3, 4), F(2, 5), 40, 3)
    want = ExactKernel(p).trunc_sum(F(-1, 2), F(-3, 4), F(2, 5), 40, 3)
    assert got == want
