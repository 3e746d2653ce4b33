"""Independent exact-rational ground truth.

ExactKernel re-implements every LHS evaluator with fractions.Fraction and
per-term binomial products (no term recurrence, no tables, no numpy), reducing
into Z/p^e only at the very end.  cross_check runs a statement through both
kernels and demands identical residue streams.  The module also certifies the
package's five closed-form identities on random rational tuples with no
modulus at all.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import DenominatorDivisibleByP, KTooLarge, OraclePrimeTooLarge

DEFAULT_ORACLE_MAX_P = 13


def exact_binom(a, k: int) -> Fraction:
    """C(a, k) as an exact rational, term-by-term."""
    if k < 0:
        return Fraction(0)
    r = Fraction(1)
    a = Fraction(a)
    for j in range(k):
        r *= (a - j)
        r /= j + 1
    return r


def exact_hyper_sum(a, c, z, n: int) -> Fraction:
    """sum_{k=0}^{n} C(a,k) C(c,k) z^k, exactly."""
    a, c, z = Fraction(a), Fraction(c), Fraction(z)
    return sum((exact_binom(a, k) * exact_binom(c, k) * z**k for k in range(n + 1)),
               start=Fraction(0))


def exact_pn(a, x, n: int) -> Fraction:
    return exact_hyper_sum(a, Fraction(-1) - Fraction(a), (1 - Fraction(x)) / 2, n)


def exact_sn(a, b, n: int) -> Fraction:
    return exact_hyper_sum(a, Fraction(b) - Fraction(a), 1, n)


class ExactKernel:
    """Drop-in kernel computing every LHS in exact rationals, reduced last."""

    name = "exact"

    def __init__(self, p: int):
        self.p = p

    def _red(self, q: Fraction, e: int) -> int:
        m = self.p**e
        if q.denominator % self.p == 0:
            raise DenominatorDivisibleByP(f"{q} at p={self.p}")
        return q.numerator * pow(q.denominator, -1, m) % m

    def gbinom(self, a, k: int, e: int) -> int:
        if k >= self.p:
            raise KTooLarge(f"k={k} >= p={self.p}")
        return self._red(exact_binom(a, k), e)

    def trunc_sum(self, a, c, z, n: int, e: int) -> int:
        return self._red(exact_hyper_sum(a, c, z, n), e)

    def trunc_sum_batch(self, A, C, z, n: int, e: int) -> list[int]:
        return [self.trunc_sum(a, c, z, n, e) for a, c in zip(A, C)]

    def recip_sum(self, a, c, x, sigma: int, e: int, n: int | None = None) -> int:
        a, c, x = Fraction(a), Fraction(c), Fraction(x)
        if n is None:
            n = self.p - 2
        tot = Fraction(0)
        for k in range(n + 1):
            tot += (exact_binom(a, k) * exact_binom(c, k)
                    * (x ** (k + 1) + sigma * (1 - x) ** (k + 1)) / (k + 1))
        return self._red(tot, e)

    def recip_sum_batch(self, A, C, x, sigmas, e: int, n: int | None = None) -> list[int]:
        return [self.recip_sum(a, c, x, s, e, n) for a, c, s in zip(A, C, sigmas)]

    def choose_pow(self, a, c, mm: int, x, e: int) -> int:
        x = Fraction(x)
        tot = Fraction(0)
        for k in range(mm, self.p):
            tot += exact_binom(a, k) * exact_binom(c, k) * _choose(k, mm) * x ** (k - mm)
        return self._red(tot, e)

    def choose_pow_batch(self, A, C, mm: int, x, e: int) -> list[int]:
        return [self.choose_pow(a, c, mm, x, e) for a, c in zip(A, C)]

    def central_sum(self, a, c, e: int) -> int:
        tot = Fraction(0)
        for k in range(self.p):
            tot += exact_binom(a, k) * exact_binom(c, k) * Fraction(_central(k), 4**k)
        return self._red(tot, e)

    def central_sum_batch(self, A, C, e: int) -> list[int]:
        return [self.central_sum(a, c, e) for a, c in zip(A, C)]

    def choose_sum(self, a, c, mm: int, e: int) -> int:
        tot = Fraction(0)
        for k in range(mm, self.p):
            tot += exact_binom(a, k) * exact_binom(c, k) * _choose(k, mm)
        return self._red(tot, e)

    def choose_sum_batch(self, A, C, mm: int, e: int) -> list[int]:
        return [self.choose_sum(a, c, mm, e) for a, c in zip(A, C)]

    def dot_ints(self, a, c, w, e: int) -> int:
        tot = Fraction(0)
        for k in range(self.p):
            tot += exact_binom(a, k) * exact_binom(c, k) * int(w[k])
        return self._red(tot, e)

    def dot_ints_batch(self, A, C, w, e: int) -> list[int]:
        return [self.dot_ints(a, c, w, e) for a, c in zip(A, C)]

    def pn_coeffs(self, a, e: int) -> list[int]:
        """x-coefficients of P_{p-1}(a, x), exactly expanded then reduced."""
        a = Fraction(a)
        coeffs = [Fraction(0)] * self.p
        pow_half = [Fraction(0)] * self.p   # current expansion of ((1-x)/2)^k
        pow_half[0] = Fraction(1)
        cur = [Fraction(1)]
        for k in range(self.p):
            t = exact_binom(a, k) * exact_binom(-1 - a, k)
            for j, cv in enumerate(cur):
                coeffs[j] += t * cv
            if k + 1 < self.p:
                nxt = [Fraction(0)] * (len(cur) + 1)
                for j, cv in enumerate(cur):   # multiply by (1-x)/2
                    nxt[j] += cv / 2
                    nxt[j + 1] -= cv / 2
                cur = nxt
        return [self._red(cv, e) for cv in coeffs]

    def pn_coeffs_batch(self, A, e: int):
        return [self.pn_coeffs(a, e) for a in A]

    def binom(self, beta, r: int, e: int) -> int:
        if r >= self.p:
            raise KTooLarge(f"r={r} >= p={self.p}")
        return self._red(exact_binom(beta, r), e)

    def binom_shift_row(self, t, e: int) -> list[int]:
        out = [0] * self.p
        for mm in range(1, self.p):
            out[mm] = self._red(exact_binom(mm + self.p * Fraction(t) - 1, self.p - 1), e)
        return out

    def harmonic_value(self, n: int, e: int) -> int:
        return self._red(sum((Fraction(1, k) for k in range(1, n + 1)), start=Fraction(0)), e)

    def central_ratio(self, n: int, e: int) -> int:
        return self._red(Fraction(_central(n), (-4) ** n), e)

    def legendre_value(self, n: int, x, e: int = 1) -> int:
        x = Fraction(x)
        if x == 1:
            return 1 % self.p**e
        tot = sum((exact_binom(n, k) ** 2 * ((x + 1) / (x - 1)) ** k for k in range(n + 1)),
                  start=Fraction(0))
        return self._red(((x - 1) / 2) ** n * tot, e)


def _central(k: int) -> int:
    """C(2k, k) as an integer."""
    import math

    return math.comb(2 * k, k)


def _choose(n: int, r: int) -> int:
    import math

    return math.comb(n, r)


# -- identity certifications (no modulus) -------------------------------------


def _rand_rational(rng: random.Random, dens=(1, 2, 3, 5, 7)) -> Fraction:
    return Fraction(rng.randint(-24, 24), rng.choice(dens))


def certify_lemma_2_1(count: int = 100, seed: int = 0) -> None:
    """(a+1)P_n(a+1,x) - (2a+1)x P_n(a,x) + a P_n(a-1,x)
    = -2(2a+1) C(a,n) C(a+n,n) ((x-1)/2)^(n+1), exactly."""
    rng = random.Random(f"lemma21:{seed}")
    for _ in range(count):
        a = _rand_rational(rng)
        x = _rand_rational(rng)
        n = rng.randint(1, 9)
        lhs = ((a + 1) * exact_pn(a + 1, x, n) - (2 * a + 1) * x * exact_pn(a, x, n)
               + a * exact_pn(a - 1, x, n))
        rhs = -2 * (2 * a + 1) * exact_binom(a, n) * exact_binom(a + n, n) * ((x - 1) / 2) ** (n + 1)
        assert lhs == rhs, (a, x, n)


def certify_lemma_2_4(count: int = 100, seed: int = 0) -> None:
    """sum_{k<=n} C(a,k)C(-1-a,k)/(k+1) = C(a-1,n)C(-2-a,n)/(n+1), exactly."""
    rng = random.Random(f"lemma24:{seed}")
    for _ in range(count):
        a = _rand_rational(rng)
        n = rng.randint(1, 10)
        lhs = sum((exact_binom(a, k) * exact_binom(-1 - a, k) / (k + 1) for k in range(n + 1)),
                  start=Fraction(0))
        rhs = exact_binom(a - 1, n) * exact_binom(-2 - a, n) / (n + 1)
        assert lhs == rhs, (a, n)


def certify_eq_4_2(count: int = 100, seed: int = 0) -> None:
    """(a-b)S_n(a,b) + (a+1)S_n(a+1,b) = (2a-b+1) C(a,n) C(b-a-1,n), exactly."""
    rng = random.Random(f"eq42:{seed}")
    for _ in range(count):
        a = _rand_rational(rng)
        b = _rand_rational(rng)
        n = rng.randint(0, 9)
        lhs = (a - b) * exact_sn(a, b, n) + (a + 1) * exact_sn(a + 1, b, n)
        rhs = (2 * a - b + 1) * exact_binom(a, n) * exact_binom(b - a - 1, n)
        assert lhs == rhs, (a, b, n)


def certify_eq_4_5(count: int = 100, seed: int = 0) -> None:
    """sum_{k<=n} C(a,k)C(-a,k) = C(n+a,n)C(n-a,n), exactly."""
    rng = random.Random(f"eq45:{seed}")
    for _ in range(count):
        a = _rand_rational(rng)
        n = rng.randint(0, 10)
        assert exact_sn(a, 0, n) == exact_binom(n + a, n) * exact_binom(n - a, n), (a, n)


def certify_eq_4_6(count: int = 100, seed: int = 0) -> None:
    """sum_{k<=n} C(a,k)C(1-a,k) = -((a^2-a-n)/n^2) C(a-2,n-1)C(-a-1,n-1), exactly."""
    rng = random.Random(f"eq46:{seed}")
    for _ in range(count):
        a = _rand_rational(rng)
        n = rng.randint(1, 10)
        lhs = exact_sn(a, 1, n)
        rhs = -Fraction(a * a - a - n, n * n) * exact_binom(a - 2, n - 1) * exact_binom(-a - 1, n - 1)
        assert lhs == rhs, (a, n)


ALL_IDENTITY_CERTIFICATIONS = {
    "lemma-2.1": certify_lemma_2_1,
    "lemma-2.4": certify_lemma_2_4,
    "eq-4.2": certify_eq_4_2,
    "eq-4.5": certify_eq_4_5,
    "eq-4.6": certify_eq_4_6,
}


# -- cross-check ---------------------------------------------------------------


def cross_check(statement_id: str, p: int, seed: int = 0,
                max_p: int = DEFAULT_ORACLE_MAX_P) -> "VerificationOutcome":
    """Re-run a statement's LHS stream with the exact kernel and compare.

    Any divergence between the two LHS paths is a build-breaking defect and is
    reported as a FAIL outcome with both values in the witness.
    """
    from .statements import get_statement, make_context
    from .report import VerificationOutcome

    if p > max_p:
        raise OraclePrimeTooLarge(f"p={p} exceeds oracle bound {max_p}")
    stmt = get_statement(statement_id)
    reason = stmt.applicable(p)
    if reason is not None:
        return VerificationOutcome(id=statement_id, kind=stmt.kind, p=p, status="SKIP",
                                   modulus=p**stmt.mod_exp, skip_reason=reason)
    ctx_mod = make_context(p, seed=seed)
    ctx_exact = make_context(p, seed=seed, exact=True)
    pts_mod = list(stmt.check(ctx_mod))
    pts_exact = list(stmt.check(ctx_exact))
    if len(pts_mod) != len(pts_exact):
        return VerificationOutcome(
            id=statement_id, kind=stmt.kind, p=p, status="FAIL",
            modulus=p**stmt.mod_exp,
            witness={"defect": "point-count mismatch",
                     "modular": len(pts_mod), "exact": len(pts_exact)})
    for pm, pe in zip(pts_mod, pts_exact):
        if pm.lhs_parts != pe.lhs_parts:
            return VerificationOutcome(
                id=statement_id, kind=stmt.kind, p=p, status="FAIL",
                modulus=pm.modulus, lhs=pm.lhs, rhs=pe.lhs,
                witness={"defect": "modular/exact LHS divergence",
                         "binding": pm.witness,
                         "modular_parts": [str(v) for v in pm.lhs_parts],
                         "exact_parts": [str(v) for v in pe.lhs_parts]})
    n = len(pts_mod)
    first = pts_mod[0] if pts_mod else None
    return VerificationOutcome(
        id=statement_id, kind=stmt.kind, p=p, status="PASS",
        modulus=first.modulus if first else p**stmt.mod_exp,
        lhs=first.lhs if first else None, rhs=first.rhs if first else None,
        witness={"points": n, "oracle": "exact rational LHS matches modular LHS"})
