"""Statements from section 4: sums of C(a,k)C(b-a,k) mod p^2."""

from __future__ import annotations

from fractions import Fraction

from ..quadforms import FormSpec, NormalizationRule, find_rep, normalize
from .base import CheckPoint, F, PrimeContext, Statement, always, p_gt, wit

_B_RATIONALS = (F(-1, 2), F(-1, 3), F(-3, 4))


def _check_l41(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    tb = ctx.tables(2)
    bs = ctx.b_grid("L4.1")[:8] + [b for b in _B_RATIONALS if b.denominator % p]
    for t in ctx.t_grid():
        a = p * t
        for c in (0, 1, 2):
            uppers = [b + c * p * t for b in bs]
            vals = ctx.kernel.trunc_sum_batch([a] * len(bs), uppers, F(1), p - 1, 2)
            for b, lhs in zip(bs, vals):
                rhs = (1 + ctx.red(p * t, 2) * tb.harmonic[ctx.least(b)]) % m
                yield CheckPoint(lhs == rhs, wit(t=t, b=b, c=c), lhs, rhs, m)


def _check_l42(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(3)
    tb = ctx.tables(3)
    for t in ctx.t_grid():
        row = ctx.kernel.binom_shift_row(t, 3)
        ptv = p * ctx.red(t, 3) % m
        for mm in range(1, p):
            lhs = row[mm]
            ptm = ptv * tb.inv[mm] % m
            rhs = (ptm - ptm * ptm + p * ptm % m * tb.harmonic[mm]) % m
            yield CheckPoint(lhs == rhs, wit(t=t, m=mm), lhs, rhs, m)


def _l43_m_grid(ctx: PrimeContext, lb: int) -> list[int]:
    p = ctx.p
    if p <= 31:
        return list(range(1, p))
    base = {1, 2, p - 1, lb, lb + 1, lb + 2, lb - 1}
    rng = ctx.rng("L4.3")
    base |= set(rng.sample(range(1, p), 8))
    return sorted(v for v in base if 1 <= v <= p - 1)


def _check_l43(ctx: PrimeContext):
    """Shifted-argument binomial C(b-(m+pt), p-1) mod p^2, three cases.

    The closed form divides by (b+1-m); the three cases split on m relative
    to <b>_p.
    """
    p, m = ctx.p, ctx.modulus(2)
    bs = [F(0), F(3 % p)] + [b for b in _B_RATIONALS if b.denominator % p]
    ts = [t for t in (F(0), F(1), F(1, 2)) if t.denominator % p]
    for b in bs:
        lb = ctx.least(b)
        for t in ts:
            for mm in _l43_m_grid(ctx, lb):
                lhs = ctx.kernel.binom(b - mm - p * t, p - 1, 2)
                if mm % p == (lb + 1) % p:
                    rhs = 1 % m
                    case = "m === b+1"
                elif mm <= lb:
                    rhs = ctx.red((b - lb - p * t) / (b + 1 - mm), 2)
                    case = "m <= <b>"
                else:
                    rhs = ctx.red((b - lb - p * (t + 1)) / (b + 1 - mm), 2)
                    case = "m > <b>+1"
                yield CheckPoint(lhs == rhs, wit(b=b, t=t, m=mm, case=case), lhs, rhs, m)


def _t41_rhs(ctx: PrimeContext, a: Fraction, b: Fraction) -> int:
    p, m = ctx.p, ctx.modulus(2)
    tb = ctx.tables(2)
    la, lb = ctx.least(a), ctx.least(b)
    if la > lb:
        sign = (-1) ** ((la - lb - 1) % 2)
        core = ctx.red((b - lb) / ((la - lb)), 2) * tb.inverse(tb.binom_small(la, lb)) % m
        return sign * core % m
    lba = ctx.least(b - a)
    corr = (1 + ctx.red(b - lb, 2) * tb.harmonic[lb]
            - ctx.red(a - la, 2) * tb.harmonic[la]
            - ctx.red(b - a - lba, 2) * tb.harmonic[lba]) % m
    return tb.binom_small(lb, la) * corr % m


def _check_t41(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    tb = ctx.tables(2)
    bs = ctx.b_grid("T4.1") + [b for b in _B_RATIONALS if b.denominator % p]
    lifts = ctx.lift_a()
    rats = ctx.rational_a()
    for b in bs:
        b_int = b.denominator == 1
        grid = lifts + rats
        vals = ctx.kernel.trunc_sum_batch(grid, [b - a for a in grid], F(1), p - 1, 2)
        for a, lhs in zip(grid, vals):
            if b_int and a.denominator == 1:
                ai, bi = int(a), int(b)
                rhs = tb.binom_small(bi, ai) if bi >= ai else 0
            else:
                rhs = _t41_rhs(ctx, a, b)
            yield CheckPoint(lhs == rhs, wit(a=a, b=b), lhs, rhs, m)


def _check_c41(ctx: PrimeContext):
    p = ctx.p
    tb = ctx.tables(1)
    bs = ctx.b_grid("C4.1") + [b for b in _B_RATIONALS if b.denominator % p]
    grid = ctx.lift_a() + ctx.rational_a()
    for b in bs:
        vals = ctx.kernel.trunc_sum_batch(grid, [b - a for a in grid], F(1), p - 1, 1)
        for a, lhs in zip(grid, vals):
            rhs = tb.binom_small(ctx.least(b), ctx.least(a))
            yield CheckPoint(lhs == rhs, wit(a=a, b=b), lhs, rhs, p)


def _check_c42(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    grid = ctx.full_a()
    vals = ctx.kernel.trunc_sum_batch(grid, [-a for a in grid], F(1), p - 1, 2)
    for a, lhs in zip(grid, vals):
        rhs = 1 % m if ctx.least(a) == 0 else 0
        yield CheckPoint(lhs == rhs, wit(a=a), lhs, rhs, m)
    # closed-form route via the product formula, on the rational subgrid
    for a in ctx.rational_a():
        lhs = ctx.kernel.trunc_sum(a, -a, F(1), p - 1, 2)
        closed = (ctx.kernel.binom(p - 1 + a, p - 1, 2)
                  * ctx.kernel.binom(p - 1 - a, p - 1, 2)) % m
        yield CheckPoint(lhs == closed, wit(a=a, route="product formula"),
                         lhs, closed, m, lhs_parts=(lhs, closed))


def _check_c43(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    grid = ctx.full_a()
    vals = ctx.kernel.trunc_sum_batch(grid, [1 - a for a in grid], F(1), p - 1, 2)
    for a, lhs in zip(grid, vals):
        la = ctx.least(a)
        if la == 0:
            rhs = ctx.red(1 + a, 2)
        elif la == 1:
            rhs = ctx.red(2 - a, 2)
        else:
            rhs = 0
        yield CheckPoint(lhs == rhs, wit(a=a), lhs, rhs, m)
    for a in ctx.rational_a():
        lhs = ctx.kernel.trunc_sum(a, 1 - a, F(1), p - 1, 2)
        n = p - 1
        lead = ctx.red(-(a * a - a - n), 2) * ctx.inv(n * n % m, 2) % m
        closed = (lead * ctx.kernel.binom(a - 2, n - 1, 2)
                  % m * ctx.kernel.binom(-a - 1, n - 1, 2)) % m
        yield CheckPoint(lhs == closed, wit(a=a, route="product formula"),
                         lhs, closed, m, lhs_parts=(lhs, closed))


def _check_i42(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    rng = ctx.rng("I4.2")
    tb = ctx.tables(2)
    for _ in range(12):
        a = F(rng.randint(-12, 12), rng.choice([1, 2, 3, 5]))
        b = F(rng.randint(-12, 12), rng.choice([1, 2, 5]))
        n = rng.randint(0, p - 1)
        if a.denominator % p == 0 or b.denominator % p == 0:
            continue
        s0 = ctx.kernel.trunc_sum(a, b - a, F(1), n, 2)
        s1 = ctx.kernel.trunc_sum(a + 1, b - a - 1, F(1), n, 2)
        lhs = (ctx.red(a - b, 2) * s0 + ctx.red(a + 1, 2) * s1) % m
        rhs = (ctx.red(2 * a - b + 1, 2) * tb.binom_falling(a, n)
               % m * tb.binom_falling(b - a - 1, n)) % m
        yield CheckPoint(lhs == rhs, wit(a=a, b=b, n=n), lhs, rhs, m,
                         lhs_parts=(s0, s1))


def _check_i45(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    rng = ctx.rng("I4.5")
    tb = ctx.tables(2)
    for _ in range(12):
        a = F(rng.randint(-12, 12), rng.choice([1, 2, 3, 5]))
        n = rng.randint(0, p - 1)
        if a.denominator % p == 0:
            continue
        lhs = ctx.kernel.trunc_sum(a, -a, F(1), n, 2)
        rhs = tb.binom_falling(n + a, n) * tb.binom_falling(n - a, n) % m
        yield CheckPoint(lhs == rhs, wit(a=a, n=n), lhs, rhs, m)


def _check_i46(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    rng = ctx.rng("I4.6")
    tb = ctx.tables(2)
    for _ in range(12):
        a = F(rng.randint(-12, 12), rng.choice([1, 2, 3, 5]))
        n = rng.randint(1, p - 1)
        if a.denominator % p == 0:
            continue
        lhs = ctx.kernel.trunc_sum(a, 1 - a, F(1), n, 2)
        rhs = (ctx.red(-(a * a - a - n), 2) * ctx.inv(n * n % m, 2)
               % m * tb.binom_falling(a - 2, n - 1)
               % m * tb.binom_falling(-a - 1, n - 1)) % m
        yield CheckPoint(lhs == rhs, wit(a=a, n=n), lhs, rhs, m)


def _check_t42(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    tb = ctx.tables(2)
    lhs = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 2), F(1), p - 1, 2)
    if p % 4 == 3:
        ee = (p + 1) // 4
        rhs = (-1) ** (ee % 2) * p * tb.inverse(tb.binom_half[ee]) % m
        yield CheckPoint(lhs == rhs, wit(case="p === 3 mod 4", index=ee), lhs, rhs, m)
        return
    rep = normalize(find_rep(FormSpec(1, 1), p), NormalizationRule(x_mod=(4, 1)))
    x = rep.x
    rhs = (-1) ** (((p - 1) // 4) % 2) * (2 * x - p * ctx.inv(2 * x % m, 2)) % m
    yield CheckPoint(lhs == rhs, wit(x=x, y=rep.y), lhs, rhs, m)


def _check_t43(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    tb = ctx.tables(2)
    lhs = ctx.kernel.trunc_sum(F(-1, 6), F(-1, 3), F(1), p - 1, 2)
    if p % 3 == 2:
        rhs = ctx.red(F(3 * p, 2), 2) * tb.inverse(tb.binom_half[(p - 5) // 6]) % m
        yield CheckPoint(lhs == rhs, wit(case="p === 2 mod 3"), lhs, rhs, m)
        return
    rep = normalize(find_rep(FormSpec(1, 3), p), NormalizationRule(x_mod=(3, 1)))
    A = rep.x
    rhs = (2 * A - p * ctx.inv(2 * A % m, 2)) % m
    yield CheckPoint(lhs == rhs, wit(A=A, B=rep.y), lhs, rhs, m)


def register(reg: dict[str, Statement]):
    reg["L4.1"] = Statement(
        "L4.1", "lemma", 2,
        "sum C(pt,k)C(b+cpt,k) === 1 + pt H_<b> mod p^2", "Lemma 4.1", always, _check_l41)
    reg["L4.2"] = Statement(
        "L4.2", "lemma", 3,
        "C(m+pt-1, p-1) === pt/m - p^2t^2/m^2 + (p^2t/m) H_m mod p^3, all m < p",
        "Lemma 4.2", always, _check_l42)
    reg["L4.3"] = Statement(
        "L4.3", "lemma", 2,
        "C(b-(m+pt), p-1) mod p^2 in three cases on m vs <b> (corrected denominator b+1-m)",
        "Lemma 4.3", always, _check_l43)
    reg["T4.1"] = Statement(
        "T4.1", "theorem", 2,
        "S_{p-1}(a,b) mod p^2: binomial main term with harmonic corrections, two cases",
        "Theorem 4.1", always, _check_t41)
    reg["C4.1"] = Statement(
        "C4.1", "corollary", 1,
        "S_{p-1}(a,b) === C(<b>, <a>) mod p", "Corollary 4.1", always, _check_c41)
    reg["C4.2"] = Statement(
        "C4.2", "corollary", 2,
        "sum C(a,k)C(-a,k) === [<a> = 0] mod p^2, with product-formula cross-check",
        "Corollary 4.2", always, _check_c42)
    reg["C4.3"] = Statement(
        "C4.3", "corollary", 2,
        "sum C(a,k)C(1-a,k) mod p^2, three cases, with product-formula cross-check",
        "Corollary 4.3", always, _check_c43)
    reg["I4.2"] = Statement(
        "I4.2", "identity", 2,
        "contiguous relation for S_n(a, b), in-ring on seeded tuples",
        "Eq (4.2)", always, _check_i42)
    reg["I4.5"] = Statement(
        "I4.5", "identity", 2,
        "S_n(a,0) = C(n+a,n)C(n-a,n), in-ring on seeded tuples", "Eq (4.5)", always,
        _check_i45)
    reg["I4.6"] = Statement(
        "I4.6", "identity", 2,
        "S_n(a,1) closed product form, in-ring on seeded tuples", "Eq (4.6)", always,
        _check_i46)
    reg["T4.2"] = Statement(
        "T4.2", "theorem", 2,
        "sum C(-1/4,k)C(-1/2,k) mod p^2 via p = x^2 + y^2 with 4 | x-1",
        "Theorem 4.2", always, _check_t42)
    reg["T4.3"] = Statement(
        "T4.3", "theorem", 2,
        "sum C(-1/6,k)C(-1/3,k) mod p^2 via p = A^2 + 3B^2 with 3 | A-1",
        "Theorem 4.3", p_gt(3), _check_t43)
