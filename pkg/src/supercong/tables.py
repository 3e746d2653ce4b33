"""Per-(p, e) lookup tables shared by the sweep kernels and RHS builders.

Everything here is O(p) to build and cached per prime context.  Inverses are
computed mod p by the standard recurrence and Hensel-lifted to p^e, so table
construction never calls pow(-1).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import DenominatorDivisibleByP, KTooLarge


class ModTables:
    """Inverse / harmonic / factorial tables mod p^e, plus small helpers."""

    def __init__(self, p: int, e: int):
        self.p = p
        self.e = e
        self.m = p**e

    @cached_property
    def inv(self) -> list[int]:
        """inv[k] = k^(-1) mod p^e for 1 <= k < p (inv[0] unused)."""
        p, m = self.p, self.m
        table = [0] * p
        if p > 1:
            table[1 % p] = 1
        for k in range(2, p):
            table[k] = (p - (p // k) * table[p % k] % p) % p
        if self.e > 1:
            for k in range(1, p):
                x = table[k]
                x = x * (2 - k * x) % m          # lift p -> p^2
                if self.e == 3:
                    x = x * (2 - k * x) % m      # lift p^2 -> p^3 (quadratic)
                table[k] = x
        return table

    @cached_property
    def inv_np(self) -> np.ndarray:
        return np.asarray(self.inv, dtype=np.int64)

    @cached_property
    def inv_sq_np(self) -> np.ndarray:
        a = self.inv_np
        return a * a % self.m

    @cached_property
    def harmonic(self) -> list[int]:
        """H[n] = sum_{k<=n} 1/k mod p^e, for 0 <= n <= p-1."""
        inv = self.inv
        out = [0] * self.p
        acc = 0
        for k in range(1, self.p):
            acc = (acc + inv[k]) % self.m
            out[k] = acc
        return out

    @cached_property
    def fact(self) -> list[int]:
        """fact[n] = n! mod p^e for 0 <= n <= p-1 (all units: no p factor)."""
        out = [1] * self.p
        for n in range(1, self.p):
            out[n] = out[n - 1] * n % self.m
        return out

    @cached_property
    def inv_fact(self) -> list[int]:
        out = [1] * self.p
        last = pow(self.fact[self.p - 1], -1, self.m)
        out[self.p - 1] = last
        for n in range(self.p - 1, 0, -1):
            last = last * n % self.m
            out[n - 1] = last
        return out

    def binom_small(self, n: int, r: int) -> int:
        """C(n, r) mod p^e for 0 <= r <= n < p."""
        if r < 0 or r > n:
            return 0
        return self.fact[n] * self.inv_fact[r] % self.m * self.inv_fact[n - r] % self.m

    @cached_property
    def binom_half(self) -> list[int]:
        """C((p-1)/2, n) mod p^e for 0 <= n <= p-1 (zero past (p-1)/2)."""
        h = (self.p - 1) // 2
        out = [0] * self.p
        c = 1
        out[0] = 1
        for n in range(h):
            c = c * ((h - n) % self.m) % self.m * self.inv[n + 1] % self.m
            out[n + 1] = c
        return out

    @cached_property
    def central_over_4k(self) -> list[int]:
        """C(2k,k)/4^k mod p^e for 0 <= k <= p-1."""
        out = [1] * self.p
        c = 1
        for k in range(self.p - 1):
            # ratio (2k+1)(2k+2)/(4 (k+1)^2) = (2k+1)/(2(k+1))
            c = c * ((2 * k + 1) % self.m) % self.m * self.inv[2] % self.m * self.inv[k + 1] % self.m
            out[k + 1] = c
        return out

    @cached_property
    def binom_matrix(self) -> np.ndarray:
        """B[k, j] = C(k, j) mod p^e as int64, shape (p, p)."""
        p, m = self.p, self.m
        B = np.zeros((p, p), dtype=np.int64)
        B[:, 0] = 1
        for k in range(1, p):
            B[k, 1:] = (B[k - 1, 1:] + B[k - 1, :-1]) % m
        return B

    def reduce(self, q: Fraction | int) -> int:
        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise DenominatorDivisibleByP(f"{q} at p={self.p}")
        return q.numerator * pow(q.denominator, -1, self.m) % self.m

    def reduce_vec(self, qs) -> np.ndarray:
        return np.asarray([self.reduce(q) for q in qs], dtype=np.int64)

    def inverse(self, v: int) -> int:
        return pow(v % self.m, -1, self.m)

    def binom_falling(self, beta: Fraction | int, r: int) -> int:
        """Generalized C(beta, r) mod p^e for r < p, via falling factorial.

        beta may be any p-integer rational; r! is a unit since r < p.  Factors
        divisible by p are tracked by valuation so powers of p survive exactly.
        """
        if r >= self.p:
            raise KTooLarge(f"k={r} >= p={self.p}")
        beta = Fraction(beta)
        num_unit = 1
        val = 0
        for j in range(r):
            f = beta - j
            fn, fd = f.numerator, f.denominator
            while fn % self.p == 0:
                fn //= self.p
                val += 1
                if val >= self.e:
                    return 0
            num_unit = num_unit * (fn % self.m) % self.m * pow(fd, -1, self.m) % self.m
        return num_unit * self.inv_fact[r] % self.m * pow(self.p, val, self.m) % self.m
