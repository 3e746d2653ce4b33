"""Ring arithmetic, scalar maps, and their invariants."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercong import (DenominatorDivisibleByP, NotDivisible, NotInvertible,
                       RingSpec, TermNotInvertible, div_by_p,
                       fermat_quotient, harmonic, inv, is_prime, jacobi_symbol,
                       least_residue, legendre_symbol, odd_primes, reduce_rational)

R5 = RingSpec(5, 1)
R25 = RingSpec(5, 2)
R125 = RingSpec(5, 3)
R49 = RingSpec(7, 2)

PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


def test_ringspec_validation():
    with pytest.raises(ValueError):
        RingSpec(4, 1)
    with pytest.raises(ValueError):
        RingSpec(2, 2)
    with pytest.raises(ValueError):
        RingSpec(7, 4)
    assert RingSpec(10007, 3).modulus == 10007**3


def test_is_prime_and_sieve_agree():
    sieved = set(odd_primes(3, 2000))
    for n in range(3, 2000, 2):
        assert (n in sieved) == is_prime(n)


def test_reduce_examples():
    assert reduce_rational(F(3, 2), R5).value == 4
    assert reduce_rational(F(-1, 2), R25).value == 12
    assert reduce_rational(F(0), R49).value == 0
    with pytest.raises(DenominatorDivisibleByP):
        reduce_rational(F(1, 5), R25)


def test_inv_examples():
    assert inv(R25.residue(1)).value == 1
    assert inv(R25.residue(2)).value == 13
    with pytest.raises(NotInvertible):
        inv(R25.residue(5))


def test_least_residue_examples():
    assert least_residue(F(4), 7) == 4
    assert least_residue(F(-1, 3), 7) == 2
    assert least_residue(F(-1, 2), 5) == 2


def test_legendre_examples():
    for p in PRIMES:
        assert legendre_symbol(1, p) == 1
    assert legendre_symbol(2, 7) == 1
    assert legendre_symbol(3, 7) == -1
    assert legendre_symbol(14, 7) == 0


def test_fermat_quotient_examples():
    assert fermat_quotient(1, 7).value == 0
    assert fermat_quotient(2, 5).value == 3
    assert fermat_quotient(3, 5).value == 1


def test_harmonic_examples():
    assert harmonic(0, R49).value == 0
    assert harmonic(2, R5).value == 4
    assert harmonic(4, R25).value == 0  # Wolstenholme-type vanishing of H_4 mod 25
    with pytest.raises(TermNotInvertible):
        harmonic(5, R5)


def test_div_by_p_examples():
    assert div_by_p(R125.residue(0)).value == 0
    assert div_by_p(R25.residue(10)).value == 2
    assert div_by_p(RingSpec(7, 2).residue(7)).value == 1
    with pytest.raises(NotDivisible):
        div_by_p(R25.residue(7))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(5, 2), (7, 1), (11, 3), (13, 2)]),
       st.integers(0, 10**6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_ring_axioms(ring_args, a, b, c):
    ring = RingSpec(*ring_args)
    ra, rb, rc = ring.residue(a), ring.residue(b), ring.residue(c)
    assert (ra + rb) + rc == ra + (rb + rc)
    assert ra * (rb + rc) == ra * rb + ra * rc
    assert ra * rb == rb * ra
    if ra.value % ring.p:
        assert (ra * inv(ra)).value == 1


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(5, 1), (5, 2), (7, 2), (11, 3)]),
       st.fractions(min_value=-50, max_value=50, max_denominator=9),
       st.fractions(min_value=-50, max_value=50, max_denominator=9))
def test_reduce_is_homomorphism(ring_args, q1, q2):
    ring = RingSpec(*ring_args)
    if q1.denominator % ring.p == 0 or q2.denominator % ring.p == 0:
        return
    if (q1 + q2).denominator % ring.p == 0 or (q1 * q2).denominator % ring.p == 0:
        return
    assert reduce_rational(q1 + q2, ring) == reduce_rational(q1, ring) + reduce_rational(q2, ring)
    assert reduce_rational(q1 * q2, ring) == reduce_rational(q1, ring) * reduce_rational(q2, ring)


def test_least_residue_matches_reduce():
    for p in PRIMES:
        ring = RingSpec(p, 1)
        for num in range(-9, 10):
            for den in (1, 2, 3, 4, 7):
                if den % p == 0:
                    continue
                q = F(num, den)
                assert least_residue(q, p) == reduce_rational(q, ring).value


def test_legendre_euler_criterion():
    for p in PRIMES:
        for a in range(1, p):
            assert legendre_symbol(a, p) % p == pow(a, (p - 1) // 2, p)


def test_fermat_quotient_multiplicative():
    for p in PRIMES:
        for a in range(1, 20):
            for b in range(1, 20):
                if a % p and b % p:
                    lhs = fermat_quotient(a * b, p).value
                    rhs = (fermat_quotient(a, p).value + fermat_quotient(b, p).value) % p
                    assert lhs == rhs


def test_jacobi_matches_legendre_on_primes():
    for p in PRIMES:
        for a in range(1, 30):
            assert jacobi_symbol(a, p) == legendre_symbol(a, p)


def test_harmonic_fermat_quotient_congruences():
    # H_{(p-1)/2} === -2 q_p(2), H_{[p/4]} === -3 q_p(2),
    # H_{[p/3]} === -(3/2) q_p(3), H_{[p/6]} === -2 q_p(2) - (3/2) q_p(3), mod p
    for p in odd_primes(5, 100):
        ring = RingSpec(p, 1)
        q2 = fermat_quotient(2, p).value
        q3 = fermat_quotient(3, p).value
        half = reduce_rational(F(3, 2), ring).value
        assert harmonic((p - 1) // 2, ring).value == -2 * q2 % p
        assert harmonic(p // 4, ring).value == -3 * q2 % p
        assert harmonic(p // 3, ring).value == -half * q3 % p
        assert harmonic(p // 6, ring).value == (-2 * q2 - half * q3) % p


def test_residue_arithmetic_with_ints_and_fractions():
    r = R25.residue(7)
    assert (r + 20).value == 2
    assert (3 - r).value == 21
    assert (r * F(1, 2)).value == (7 * 13) % 25
    assert (-r).value == 18
    assert (r**2).value == 24
