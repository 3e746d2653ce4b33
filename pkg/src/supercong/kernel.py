"""Residue-level API for generalized binomial sums and Legendre polynomials.

These wrap the fast modular kernels with the Residue/CoeffPoly types; the
sweep engine in ``statements`` talks to the kernels directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import KTooLarge
from .fastkernel import ModKernel
from .padic import Residue, RingSpec

_kernels: dict[int, ModKernel] = {}


def _kernel(p: int) -> ModKernel:
    if p not in _kernels:
        _kernels[p] = ModKernel(p)
    return _kernels[p]


@dataclass(frozen=True)
class CoeffPoly:
    """Dense polynomial over Z/p^e, coeffs[j] = coefficient of x^j."""

    coeffs: tuple[int, ...]
    ring: RingSpec

    def __len__(self):
        return len(self.coeffs)

    def evaluate(self, x: Fraction | int) -> Residue:
        from .padic import reduce_rational

        xv = reduce_rational(Fraction(x), self.ring).value
        m = self.ring.modulus
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * xv + c) % m
        return Residue(acc, self.ring)


def gbinom(a: Fraction | int, k: int, ring: RingSpec) -> Residue:
    """Generalized binomial C(a, k) in Z/p^e; requires k < p."""
    return Residue(_kernel(ring.p).gbinom(Fraction(a), k, ring.e), ring)


def hyper_sum(a, c, z, n: int, ring: RingSpec) -> Residue:
    """Truncated sum of C(a,k) C(c,k) z^k for k = 0..n, in Z/p^e."""
    if n > ring.p - 1:
        raise KTooLarge(f"n={n} > p-1")
    return Residue(_kernel(ring.p).trunc_sum(Fraction(a), Fraction(c), Fraction(z), n, ring.e), ring)


def pn_eval(a, x, n: int, ring: RingSpec) -> Residue:
    """Generalized Legendre polynomial value: hyper_sum with c=-1-a, z=(1-x)/2."""
    a, x = Fraction(a), Fraction(x)
    return hyper_sum(a, -1 - a, (1 - x) / 2, n, ring)


def sn_eval(a, b, n: int, ring: RingSpec) -> Residue:
    """S_n(a, b) = sum C(a,k) C(b-a,k)."""
    a, b = Fraction(a), Fraction(b)
    return hyper_sum(a, b - a, Fraction(1), n, ring)


def pn_coeffs(a, n: int, ring: RingSpec) -> CoeffPoly:
    """Dense x-coefficients of P_n(a, x) in Z/p^e (n <= p-1)."""
    if n > ring.p - 1:
        raise KTooLarge(f"n={n} > p-1")
    full = _kernel(ring.p).pn_coeffs(Fraction(a), ring.e)
    # the kernel expands to truncation p-1; terms k > n must be cut for n < p-1
    if n == ring.p - 1:
        coeffs = full
    else:
        m = ring.modulus
        kern = _kernel(ring.p)
        coeffs = [0] * (n + 1)
        u = kern.u_half_table([Fraction(a)], ring.e)[0]
        tb = kern.tables(ring.e)
        for k in range(n + 1):
            uk = int(u[k])
            if uk == 0:
                continue
            cb = 1
            for j in range(k + 1):
                coeffs[j] = (coeffs[j] + uk * cb * (1 if j % 2 == 0 else -1)) % m
                cb = cb * (k - j) % m * tb.inv[j + 1] % m
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    return CoeffPoly(tuple(int(c) % ring.modulus for c in coeffs), ring)


def poly_derivative(f: CoeffPoly) -> CoeffPoly:
    """Formal derivative."""
    m = f.ring.modulus
    if len(f.coeffs) <= 1:
        return CoeffPoly((0,), f.ring)
    return CoeffPoly(tuple(j * c % m for j, c in enumerate(f.coeffs) if j >= 1), f.ring)


def legendre_pn(n: int, x, ring: RingSpec) -> Residue:
    """Classical Legendre polynomial P_n(x) mod p (ring must have e=1)."""
    return Residue(_kernel(ring.p).legendre_value(n, Fraction(x), ring.e), ring)


def binom_transform(f: list[Residue] | list[int], k: int, ring: RingSpec) -> Residue:
    """sum_{m=0}^{k} C(k,m) (-1)^m f(m) in Z/p^e."""
    if k >= ring.p:
        raise KTooLarge(f"k={k} >= p={ring.p}")
    m = ring.modulus
    vals = [v.value if isinstance(v, Residue) else int(v) % m for v in f]
    tb = _kernel(ring.p).tables(ring.e)
    acc = 0
    cb = 1
    for j in range(k + 1):
        acc = (acc + (cb if j % 2 == 0 else -cb) * vals[j]) % m
        if j < k:
            cb = cb * (k - j) % m * tb.inv[j + 1] % m
    return Residue(acc, ring)
