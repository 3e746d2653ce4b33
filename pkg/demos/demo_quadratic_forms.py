"""Quadratic-form right-hand sides: sums pinned by p = A^2 + 3B^2 and friends.

For p === 1 (mod 3), the sum of C(2k,k)C(3k,k)/54^k lands on 2A - p/(2A) mod
p^2 where p = A^2 + 3B^2 with A === 1 (mod 3); for p === 2 (mod 3) it vanishes.
The demo tabulates the representation, the normalized A, and both sides.
"""

from fractions import Fraction as F

from supercong import (FormSpec, NormalizationRule, RingSpec, find_rep,
                       hyper_sum, normalize, odd_primes)


def main():
    form = FormSpec(1, 3)
    rule = NormalizationRule(x_mod=(3, 1))
    print("p    A^2+3B^2      lhs      2A - p/(2A)")
    for p in odd_primes(5, 200):
        ring = RingSpec(p, 2)
        m = ring.modulus
        lhs = hyper_sum(F(-1, 3), F(-2, 3), F(1, 2), p - 1, ring).value
        if p % 3 == 2:
            status = "ok" if lhs == 0 else "MISMATCH"
            print(f"{p:<4d} (none)        {lhs:>8d} 0 [p === 2 mod 3] {status}")
            continue
        rep = normalize(find_rep(form, p), rule)
        rhs = (2 * rep.x - p * pow(2 * rep.x % m, -1, m)) % m
        status = "ok" if lhs == rhs else "MISMATCH"
        print(f"{p:<4d} ({rep.x:>3d},{rep.y:>3d})    {lhs:>8d} {rhs:>8d}   {status}")


if __name__ == "__main__":
    main()
