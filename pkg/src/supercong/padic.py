"""Exact arithmetic in Z/p^e (e in {1,2,3}) and the scalar number-theoretic maps.

Rationals with denominator coprime to p ("p-integers") are represented by
``fractions.Fraction``; reducing one into Z/p^e multiplies the numerator by the
inverse of the denominator.  Residues are kept as least nonnegative lifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BaseDivisibleByP,
    DenominatorDivisibleByP,
    NotDivisible,
    NotInvertible,
    TermNotInvertible,
)

PRational = Fraction

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far past 2^64 with this witness set."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def odd_primes(lo: int, hi: int) -> list[int]:
    """Odd primes in [lo, hi], by sieve."""
    if hi < 3:
        return []
    size = hi + 1
    mark = bytearray([1]) * size
    mark[0:2] = b"\x00\x00"
    for i in range(2, int(hi**0.5) + 1):
        if mark[i]:
            mark[i * i :: i] = bytearray(len(range(i * i, size, i)))
    return [n for n in range(max(lo, 3), hi + 1) if mark[n] and n % 2]


@dataclass(frozen=True)
class RingSpec:
    """The ring Z/p^e for an odd prime p and e in {1,2,3}."""

    p: int
    e: int

    def __post_init__(self):
        if self.e not in (1, 2, 3):
            raise ValueError(f"exponent must be 1, 2 or 3, got {self.e}")
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        object.__setattr__(self, "modulus", self.p**self.e)

    modulus: int = 0  # filled in __post_init__

    def residue(self, value: int) -> "Residue":
        return Residue(value % self.modulus, self)


@dataclass(frozen=True)
class Residue:
    """Least nonnegative lift of an element of Z/p^e."""

    value: int
    ring: RingSpec

    def __post_init__(self):
        if not 0 <= self.value < self.ring.modulus:
            object.__setattr__(self, "value", self.value % self.ring.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.ring != self.ring:
                raise ValueError("mixed rings")
            return other.value
        if isinstance(other, int):
            return other % self.ring.modulus
        if isinstance(other, Fraction):
            return reduce_rational(other, self.ring).value
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return Residue((self.value + v) % self.ring.modulus, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return Residue((self.value - v) % self.ring.modulus, self.ring)

    def __rsub__(self, other):
        v = self._coerce(other)
        return Residue((v - self.value) % self.ring.modulus, self.ring)

    def __mul__(self, other):
        v = self._coerce(other)
        return Residue(self.value * v % self.ring.modulus, self.ring)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value % self.ring.modulus, self.ring)

    def __pow__(self, n: int):
        return Residue(pow(self.value, n, self.ring.modulus), self.ring)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.value == other.value and self.ring == other.ring
        if isinstance(other, int):
            return self.value == other % self.ring.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.ring))

    def __repr__(self):
        return f"{self.value} (mod {self.ring.p}^{self.ring.e})"


def reduce_rational(q: Fraction | int, ring: RingSpec) -> Residue:
    """Embed a p-integer rational into Z/p^e."""
    q = Fraction(q)
    if q.denominator % ring.p == 0:
        raise DenominatorDivisibleByP(f"{q} has denominator divisible by {ring.p}")
    m = ring.modulus
    return Residue(q.numerator * pow(q.denominator, -1, m) % m, ring)


def inv(r: Residue) -> Residue:
    if r.value % r.ring.p == 0:
        raise NotInvertible(f"{r.value} shares factor {r.ring.p} with modulus")
    return Residue(pow(r.value, -1, r.ring.modulus), r.ring)


def least_residue(q: Fraction | int, p: int) -> int:
    """<q>_p: the unique n in [0,p) with q === n (mod p)."""
    q = Fraction(q)
    if q.denominator % p == 0:
        raise DenominatorDivisibleByP(f"{q} has denominator divisible by {p}")
    return q.numerator * pow(q.denominator, -1, p) % p


def legendre_symbol(a: int, p: int) -> int:
    """Euler's criterion: +1 for nonzero squares mod p, -1 otherwise, 0 if p|a."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd n > 0."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("n must be positive odd")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def fermat_quotient(a: int, p: int) -> Residue:
    """q_p(a) = (a^(p-1) - 1)/p, as a residue mod p."""
    if a % p == 0:
        raise BaseDivisibleByP(f"{a} divisible by {p}")
    v = (pow(a, p - 1, p * p) - 1) // p
    return Residue(v % p, RingSpec(p, 1))


def harmonic(n: int, ring: RingSpec) -> Residue:
    """H_n = sum_{k<=n} 1/k in Z/p^e; every k <= n must be a unit (n < p)."""
    if n >= ring.p:
        raise TermNotInvertible(f"harmonic({n}) hits the term 1/{ring.p}")
    m = ring.modulus
    acc = 0
    for k in range(1, n + 1):
        acc = (acc + pow(k, -1, m)) % m
    return Residue(acc, ring)


def div_by_p(r: Residue) -> Residue:
    """Exact division by p, dropping one exponent: Z/p^e -> Z/p^(e-1)."""
    ring = r.ring
    if ring.e < 2:
        raise ValueError("div_by_p needs e >= 2")
    if r.value % ring.p != 0:
        raise NotDivisible(f"{r.value} not divisible by {ring.p}")
    sub = RingSpec(ring.p, ring.e - 1)
    return Residue((r.value // ring.p) % sub.modulus, sub)
