"""Statements from section 3: values of P_{p-1}(a, 0) and harmonic identities."""

from __future__ import annotations

import math
from fractions import Fraction

from ..quadforms import FormSpec, NormalizationRule, find_rep, normalize
from .base import CheckPoint, F, PrimeContext, Statement, always, p_gt, wit


def _check_l31(ctx: PrimeContext):
    p = ctx.p
    q2 = ctx.qp(2)
    checks = [("(p-1)/2", (p - 1) // 2, -2 * q2),
              ("[p/4]", p // 4, -3 * q2)]
    if p > 3:
        q3 = ctx.qp(3)
        half3 = F(-3, 2) * q3
        checks.append(("[p/3]", p // 3, ctx.red(half3, 1)))
        checks.append(("[p/6]", p // 6, ctx.red(-2 * q2 + half3, 1)))
    for label, n, rhs in checks:
        lhs = ctx.kernel.harmonic_value(n, 1)
        rhs = rhs % p
        yield CheckPoint(lhs == rhs, wit(index=label, n=n), lhs, rhs, p)


def _t31_rhs(ctx: PrimeContext, n: int, t: Fraction) -> int:
    p, m = ctx.p, ctx.modulus(2)
    tb = ctx.tables(2)
    if 2 * n > p - 1:
        return None
    coeff = (ctx.red(1 + t, 2) * tb.harmonic[2 * n]
             - ctx.red((2 * t + 1) / 2, 2) * tb.harmonic[n]
             - ctx.red(t, 2) * ctx.qp(2)) % m
    return tb.binom_half[n] * (1 + p * coeff) % m


def _check_t31(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    for t in (F(0), F(1), F(2)):
        odd_ns = list(range((p - 1) // 2))
        if odd_ns:
            grid = [2 * n + 1 + p * t for n in odd_ns]
            vals = ctx.kernel.trunc_sum_batch(grid, [F(-1) - a for a in grid],
                                              F(1, 2), p - 1, 2)
            for n, lhs in zip(odd_ns, vals):
                yield CheckPoint(lhs == 0, wit(part="i", n=n, t=t), lhs, 0, m)
        even_ns = list(range((p + 1) // 2))
        grid = [2 * n + p * t for n in even_ns]
        vals = ctx.kernel.trunc_sum_batch(grid, [F(-1) - a for a in grid],
                                          F(1, 2), p - 1, 2)
        for n, lhs in zip(even_ns, vals):
            rhs = _t31_rhs(ctx, n, t)
            if rhs is None:
                yield CheckPoint(True, wit(part="ii", n=n, t=t,
                                           skipped="harmonic index out of range"),
                                 lhs, lhs, m, note="guard")
                continue
            yield CheckPoint(lhs == rhs, wit(part="ii", n=n, t=t), lhs, rhs, m)


def _check_e31(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    tb = ctx.tables(2)
    for n in range((p + 1) // 2):
        lhs = ctx.kernel.central_ratio(n, 2)
        rhs = tb.binom_half[n] * (1 + p * ((tb.harmonic[2 * n]
                                            - tb.harmonic[n] * tb.inv[2]) % m)) % m
        yield CheckPoint(lhs == rhs, wit(n=n), lhs, rhs, m)


def _check_c31(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    grid = [a for a in ctx.full_a() if ctx.least(a) != 0]
    plus = ctx.kernel.trunc_sum_batch(grid, [F(-1) - a for a in grid], F(1, 2), p - 1, 2)
    minus = ctx.kernel.trunc_sum_batch([-a for a in grid], [a - 1 for a in grid],
                                       F(1, 2), p - 1, 2)
    for a, v1, v2 in zip(grid, plus, minus):
        ok = v1 == 0 or v2 == 0
        yield CheckPoint(ok, wit(a=a), v1, v2, m, lhs_parts=(v1, v2))


def _t32_pairs() -> list[tuple[int, int]]:
    out = []
    for mm in range(2, 13):
        for r in range(-(mm - 1), mm):
            if r != 0 and math.gcd(r, mm) == 1:
                out.append((r, mm))
    return out


def _t32_decompose(r: int, mm: int, p: int):
    """(s, n, t, in_printed_range) for the even-residue decomposition, or None.

    a = r/m equals 2n + pt for a unique n in [0, (p-1)/2] exactly when <a>_p is
    even (both of a, -1-a have the same parity of least residue, and an odd
    residue yields the vanishing case instead).  The matching s of the case
    hypotheses is 2s/m = -t for odd m and s/m = -t for even m; its advertised
    range {1..(m-1)/2} (resp. {1..m/2}) misses decompositions with t <= -1+1/m,
    which do occur (e.g. r/m = 1/4, p = 13, s = 3), so the range is widened to
    whatever the decomposition demands.
    """
    a = F(r, mm)
    la = a.numerator * pow(mm, -1, p) % p
    if la % 2:
        return None
    n = la // 2
    t = (a - la) / p
    if mm % 2:
        s = -t * mm / 2
    else:
        s = -t * mm
    in_range = s.denominator == 1 and 1 <= s <= (mm - 1) // 2 if mm % 2 else \
        s.denominator == 1 and 1 <= s <= mm // 2
    return int(s) if s.denominator == 1 else s, n, t, bool(in_range)


def _check_t32(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    tb = ctx.tables(2)
    pairs = [(r, mm) for r, mm in _t32_pairs() if mm % p != 0]
    grid = [F(r, mm) for r, mm in pairs]
    vals = ctx.kernel.trunc_sum_batch(grid, [F(-1) - a for a in grid], F(1, 2), p - 1, 2)
    for (r, mm), lhs in zip(pairs, vals):
        hit = _t32_decompose(r, mm, p)
        if hit is None:
            yield CheckPoint(lhs == 0, wit(r=r, m=mm, case="odd residue, vanishing"),
                             lhs, 0, m)
            continue
        s, n, t, in_range = hit
        w = -t  # 2s/m (odd m) or s/m (even m)
        coeff = (ctx.red(1 - w, 2) * tb.harmonic[2 * n]
                 + ctx.red(w - F(1, 2), 2) * tb.harmonic[n]
                 + ctx.red(w, 2) * ctx.qp(2)) % m
        rhs = tb.binom_half[n] * (1 + p * coeff) % m
        yield CheckPoint(lhs == rhs, wit(r=r, m=mm, s=s, n=n, t=t,
                                         printed_s_range=in_range), lhs, rhs, m)


_T33_FAMILIES = [
    (2, 4, (1,)), (3, 3, (1,)), (4, 8, (1, 3)), (5, 5, (1, 2)), (6, 4, (1,)),
    (7, 7, (1, 3, 5)), (8, 16, (1, 7, 11, 13)), (9, 9, (1, 2, 4)),
    (10, 20, (1, 3, 7, 9)), (11, 11, (1, 4, 5, 8, 9)), (12, 24, (1, 5, 7, 11)),
]


def _check_t33(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    fams = [(mm, md, cls) for mm, md, cls in _T33_FAMILIES
            if mm % p != 0 and p % md in cls]
    if not fams:
        return
    grid = [F(1, mm) for mm, _, _ in fams]
    vals = ctx.kernel.trunc_sum_batch(grid, [F(-1) - a for a in grid], F(1, 2), p - 1, 2)
    for (mm, md, cls), lhs in zip(fams, vals):
        yield CheckPoint(lhs == 0, wit(a=F(1, mm), family_class=f"{p % md} mod {md}"),
                         lhs, 0, m)


def _check_t34(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    lhs = ctx.kernel.trunc_sum(F(-1, 3), F(-2, 3), F(1, 2), p - 1, 2)
    if p % 3 == 2:
        yield CheckPoint(lhs == 0, wit(case="p === 2 mod 3"), lhs, 0, m)
        return
    rep = normalize(find_rep(FormSpec(1, 3), p), NormalizationRule(x_mod=(3, 1)))
    A = rep.x
    rhs = (2 * A - p * ctx.inv(2 * A % m, 2)) % m
    yield CheckPoint(lhs == rhs, wit(A=A, B=rep.y), lhs, rhs, m)


def register(reg: dict[str, Statement]):
    reg["L3.1"] = Statement(
        "L3.1", "lemma", 1,
        "harmonic numbers at p/2, p/4, p/3, p/6 in terms of Fermat quotients mod p",
        "Lemma 3.1", always, _check_l31)
    reg["T3.1"] = Statement(
        "T3.1", "theorem", 2,
        "P_{p-1}(2n+1+pt, 0) === 0; P_{p-1}(2n+pt, 0) has a harmonic closed form mod p^2",
        "Theorem 3.1", always, _check_t31)
    reg["E3.1"] = Statement(
        "E3.1", "identity", 2,
        "C(2n,n)/(-4)^n === C((p-1)/2, n)(1 + p(H_2n - H_n/2)) mod p^2",
        "Eq (3.1)", always, _check_e31)
    reg["C3.1"] = Statement(
        "C3.1", "corollary", 2,
        "for a !== 0: P_{p-1}(a, 0) or P_{p-1}(-a, 0) vanishes mod p^2",
        "Corollary 3.1", always, _check_c31)
    reg["T3.2"] = Statement(
        "T3.2", "theorem", 2,
        "P_{p-1}(r/m, 0) mod p^2 over all reduced r/m with 2 <= m <= 12, three parity cases",
        "Theorem 3.2", always, _check_t32)
    reg["T3.3"] = Statement(
        "T3.3", "theorem", 2,
        "eleven vanishing families P_{p-1}(1/m, 0) === 0 mod p^2 in listed residue classes",
        "Theorem 3.3", always, _check_t33)
    reg["T3.4"] = Statement(
        "T3.4", "theorem", 2,
        "sum C(2k,k)C(3k,k)/54^k mod p^2 via p = A^2 + 3B^2 with 3 | A-1",
        "Theorem 3.4", p_gt(3), _check_t34)
