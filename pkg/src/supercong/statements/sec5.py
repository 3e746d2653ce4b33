"""Statements from section 5: sums of C(a,k)^2 m^k and classical Legendre values."""

from __future__ import annotations

from ..quadforms import FormSpec, NormalizationRule, find_rep, normalize
from .base import CheckPoint, F, PrimeContext, Statement, always, p_gt, p_not, wit


def _check_t51(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    tb = ctx.tables(2)
    lhs = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(1), p - 1, 2)
    if p % 4 == 3:
        rhs = 2 * p * tb.inverse(tb.binom_half[(p + 1) // 4]) % m
        yield CheckPoint(lhs == rhs, wit(case="p === 3 mod 4"), lhs, rhs, m)
        return
    rep = normalize(find_rep(FormSpec(1, 1), p), NormalizationRule(x_mod=(4, 1)))
    x = rep.x
    rhs = (2 * x - p * ctx.inv(2 * x % m, 2)) % m
    yield CheckPoint(lhs == rhs, wit(x=x, y=rep.y), lhs, rhs, m)


def _check_r51(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    tb = ctx.tables(2)
    lifts = ctx.lift_a()
    vals = ctx.kernel.trunc_sum_batch(lifts, lifts, F(1), p - 1, 2)
    pf = _pfree_fact_2p(tb)
    for a, lhs in zip(lifts, vals):
        ai = int(a)
        rhs = pf[2 * ai] * tb.inv_fact[ai] % m * tb.inv_fact[ai] % m
        if 2 * ai >= p:
            rhs = rhs * p % m
        yield CheckPoint(lhs == rhs, wit(a=a), lhs, rhs, m)
    rats = ctx.rational_a()
    vals = ctx.kernel.trunc_sum_batch(rats, rats, F(1), p - 1, 2)
    for a, lhs in zip(rats, vals):
        rhs = tb.binom_falling(2 * a, ctx.least(a))
        yield CheckPoint(lhs == rhs, wit(a=a), lhs, rhs, m)


def _pfree_fact_2p(tb) -> list[int]:
    if not hasattr(tb, "_pfree2p"):
        out = [1] * (2 * tb.p)
        acc = 1
        for n in range(1, 2 * tb.p):
            if n % tb.p:
                acc = acc * n % tb.m
            out[n] = acc
        tb._pfree2p = out
    return tb._pfree2p


def _check_l51(ctx: PrimeContext):
    p = ctx.p
    ns = sorted({0, 1, 2, 3, 5, 8, (p - 1) // 2, p - 2} & set(range(p)))
    rng = ctx.rng("L5.1")
    xs = sorted(set(rng.sample(range(p), min(10, p))) - {1})
    for n in ns:
        for x in xs:
            lhs = ctx.kernel.legendre_value(n, F(x), 1)
            rhs = _legendre_rec(ctx, n, x)
            yield CheckPoint(lhs == rhs, wit(n=n, x=x), lhs, rhs, p)


def _legendre_rec(ctx: PrimeContext, n: int, x) -> int:
    """Three-term recurrence route, kernel-independent."""
    p = ctx.p
    tb = ctx.tables(1)
    xv = tb.reduce(F(x))
    if n == 0:
        return 1 % p
    prev, cur = 1, xv
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1) * xv % p * cur - k * prev) % p * tb.inv[k + 1] % p
    return cur


def _check_l52(ctx: PrimeContext):
    p = ctx.p
    grid = [a for a in (ctx.rational_a() + ctx.stratified_a("L5.2", 8)[-8:])
            if ctx.least(a) != 0]
    ts = [t for t in (F(2), F(3), F(5), F(1, 2), F(-1)) if t.denominator % p]
    for t in ts:
        tv = ctx.red(t, 1)
        vals = ctx.kernel.trunc_sum_batch(grid, grid, t, p - 1, 1)
        if tv != 0:
            inv_vals = ctx.kernel.trunc_sum_batch(grid, grid, 1 / t, p - 1, 1)
            for a, s, si in zip(grid, vals, inv_vals):
                la = ctx.least(a)
                rhs = pow(tv, la, p) * si % p
                yield CheckPoint(s == rhs, wit(a=a, t=t, part="reciprocal"),
                                 s, rhs, p, lhs_parts=(s, si))
        if (tv - 1) % p != 0:
            for a, s in zip(grid, vals):
                la = ctx.least(a)
                pv = ctx.kernel.legendre_value(la, (t + 1) / (t - 1), 1)
                rhs = pow((tv - 1) % p, la, p) * pv % p
                yield CheckPoint(s == rhs, wit(a=a, t=t, part="legendre"),
                                 s, rhs, p, lhs_parts=(s, pv))


def _check_l53(ctx: PrimeContext):
    p = ctx.p
    if p <= 31:
        ms = list(range(1, (p - 1) // 2 + 1))
        xs = list(range(p))
    else:
        rng = ctx.rng("L5.3")
        ms = sorted(rng.sample(range(1, (p - 1) // 2 + 1), 8))
        xs = sorted(rng.sample(range(p), 16))
    for mm in ms:
        for x in xs:
            v1 = ctx.kernel.legendre_value(p - 1 - mm, F(x), 1)
            v2 = ctx.kernel.legendre_value(mm, F(x), 1)
            yield CheckPoint(v1 == v2, wit(m=mm, x=x), v1, v2, p, lhs_parts=(v1, v2))


def _check_t52(ctx: PrimeContext):
    p = ctx.p
    grid = [a for a in (ctx.rational_a() + ctx.stratified_a("T5.2", 8)[-8:])
            if ctx.least(a) != p - 1]
    neg = [F(-1) - a for a in grid]
    ts = [t for t in (F(2), F(3), F(1, 2), F(-1), F(0)) if t.denominator % p]
    for t in ts:
        if (ctx.red(t, 1) - 1) % p == 0:
            continue
        lhs_vals = ctx.kernel.trunc_sum_batch(neg, neg, t, p - 1, 1)
        rhs_vals = ctx.kernel.trunc_sum_batch(grid, grid, t, p - 1, 1)
        for a, lv, rv in zip(grid, lhs_vals, rhs_vals):
            la = ctx.least(a)
            factor = pow(ctx.inv((ctx.red(t, 1) - 1) % p, 1), 2 * la, p)
            rhs = factor * rv % p
            yield CheckPoint(lv == rhs, wit(a=a, t=t), lv, rhs, p, lhs_parts=(lv, rv))


def _check_t53(ctx: PrimeContext):
    p = ctx.p
    s9 = ctx.kernel.trunc_sum(F(-1, 3), F(-1, 3), F(9), p - 1, 1)
    s19 = ctx.kernel.trunc_sum(F(-1, 3), F(-1, 3), F(1, 9), p - 1, 1)
    mid = pow(ctx.inv(pow(3, p // 3, p), 1), 1, p) * s19 % p
    if p % 3 == 1:
        rep = normalize(find_rep(FormSpec(1, 27, 4), p), NormalizationRule(x_mod=(3, 2)))
        L = rep.x
        rhs = L % p
        ok = s9 == mid == rhs
        yield CheckPoint(ok, wit(L=L, M=rep.y), s9, rhs, p, lhs_parts=(s9, s19))
    else:
        ok = s9 == mid == 0
        yield CheckPoint(ok, wit(case="p === 2 mod 3"), s9, 0, p, lhs_parts=(s9, s19))


def _check_t54(ctx: PrimeContext):
    p = ctx.p
    s1 = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(-8), p - 1, 1)
    s2 = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(-1, 8), p - 1, 1)
    if p % 4 == 3:
        yield CheckPoint(s1 == 0 and s2 == 0, wit(case="p === 3 mod 4"),
                         s1, 0, p, lhs_parts=(s1, s2))
        return
    rep = normalize(find_rep(FormSpec(1, 1), p), NormalizationRule(x_mod=(4, 1)))
    x, y = rep.x, rep.y
    rhs1 = (-1) ** (((p - 1) // 4) % 2) * 2 * x % p
    yield CheckPoint(s1 == rhs1, wit(part="(-8)^k", x=x, y=y), s1, rhs1, p,
                     lhs_parts=(s1, s2))
    if p % 8 == 1:
        yy = y if y % 4 == 0 else -y
        rhs2 = (-1) ** ((yy // 4) % 2) * 2 * x % p
    else:
        yy = y if (y - 2) % 4 == 0 else -y
        rhs2 = (-1) ** (((yy - 2) // 4) % 2) * 2 * yy % p
    yield CheckPoint(s2 == rhs2, wit(part="(-8)^-k", x=x, y=yy), s2, rhs2, p,
                     lhs_parts=(s1, s2))


def _check_t55(ctx: PrimeContext):
    p = ctx.p
    s1 = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(4), p - 1, 1)
    s2 = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(1, 4), p - 1, 1)
    cp = 1 if p % 4 == 1 else 2
    chain = s1 == cp * ctx.leg(2) * s2 % p
    if p % 3 == 2:
        yield CheckPoint(chain and s1 == 0, wit(case="p === 2 mod 3", chain_held=chain),
                         s1, 0, p, lhs_parts=(s1, s2))
        return
    rep = normalize(find_rep(FormSpec(1, 3), p), NormalizationRule(x_mod=(3, 1)))
    A, B = rep.x, rep.y
    if p % 12 == 1:
        rhs = (-1) ** ((((p - 1) // 4) + ((A - 1) // 2)) % 2) * 2 * A % p
        w = wit(case="p === 1 mod 12", A=A)
    else:
        BB = B if (B - 1) % 4 == 0 else -B
        rhs = (-1) ** (((p + 1) // 4) % 2) * 6 * BB % p
        w = wit(case="p === 7 mod 12", B=BB)
    w["chain_held"] = chain
    yield CheckPoint(chain and s1 == rhs, w, s1, rhs, p, lhs_parts=(s1, s2))


def _check_t56(ctx: PrimeContext):
    p = ctx.p
    s1 = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(64), p - 1, 1)
    s2 = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(1, 64), p - 1, 1)
    dp = 1 if p % 4 == 1 else 8
    chain = s1 == dp * ctx.leg(2) * s2 % p
    if p % 7 in (3, 5, 6):
        yield CheckPoint(chain and s1 == 0, wit(case="(p|7) = -1", chain_held=chain),
                         s1, 0, p, lhs_parts=(s1, s2))
        return
    rep = find_rep(FormSpec(1, 7), p)
    x, y = rep.x, rep.y
    if p % 4 == 1:
        rhs = (-1) ** ((((p - 1) // 4) + ((x - 1) // 2)) % 2) * 2 * x % p
        w = wit(case="p === 1 mod 4", x=x, y=y)
    else:
        rhs = (-1) ** ((((p + 1) // 4) + ((y - 1) // 2)) % 2) * 42 * y % p
        w = wit(case="p === 3 mod 4", x=x, y=y)
    w["chain_held"] = chain
    yield CheckPoint(chain and s1 == rhs, w, s1, rhs, p, lhs_parts=(s1, s2))


def register(reg: dict[str, Statement]):
    reg["T5.1"] = Statement(
        "T5.1", "theorem", 2,
        "sum C(-1/4,k)^2 mod p^2 via p = x^2+y^2 with 4 | x-1", "Theorem 5.1",
        always, _check_t51)
    reg["R5.1"] = Statement(
        "R5.1", "theorem", 2,
        "sum C(a,k)^2 === C(2a, <a>) mod p^2 (cited closed form)", "Remark 5.1",
        always, _check_r51)
    reg["L5.1"] = Statement(
        "L5.1", "lemma", 1,
        "squared-binomial closed form of P_n(x) agrees with the recurrence, x != 1",
        "Lemma 5.1", always, _check_l51)
    reg["L5.2"] = Statement(
        "L5.2", "lemma", 1,
        "reciprocal-argument and Legendre-value forms of sum C(a,k)^2 t^k mod p",
        "Lemma 5.2", always, _check_l52)
    reg["L5.3"] = Statement(
        "L5.3", "lemma", 1,
        "P_{p-1-m}(x) === P_m(x) mod p for m <= (p-1)/2", "Lemma 5.3", always,
        _check_l53)
    reg["T5.2"] = Statement(
        "T5.2", "theorem", 1,
        "sum C(-1-a,k)^2 t^k === (t-1)^(-2<a>) sum C(a,k)^2 t^k mod p", "Theorem 5.2",
        always, _check_t52)
    reg["T5.3"] = Statement(
        "T5.3", "theorem", 1,
        "sum C(-1/3,k)^2 9^k chain via 4p = L^2+27M^2 with L === 2 mod 3",
        "Theorem 5.3", p_gt(3), _check_t53)
    reg["T5.4"] = Statement(
        "T5.4", "theorem", 1,
        "sum C(-1/4,k)^2 (-8)^(+-k) mod p via p = x^2+y^2", "Theorem 5.4",
        always, _check_t54)
    reg["T5.5"] = Statement(
        "T5.5", "theorem", 1,
        "sum C(-1/4,k)^2 4^(+-k) chain mod p via p = A^2+3B^2", "Theorem 5.5",
        p_gt(3), _check_t55)
    reg["T5.6"] = Statement(
        "T5.6", "theorem", 1,
        "sum C(-1/4,k)^2 64^(+-k) chain mod p via p = x^2+7y^2", "Theorem 5.6",
        p_not(7), _check_t56)
