"""Conjectures 5.1-5.5: mod p^2 refinements of the section-5 evaluations."""

from __future__ import annotations

from ..quadforms import FormSpec, NormalizationRule, find_rep, normalize
from .base import (CheckPoint, F, PrimeContext, Statement, always, mod_class,
                   p_gt, p_not, wit)


def _check_cj51(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    lhs = ctx.kernel.trunc_sum(F(-1, 3), F(-1, 3), F(9), p - 1, 2)
    rep = normalize(find_rep(FormSpec(1, 27, 4), p), NormalizationRule(x_mod=(3, 2)))
    L = rep.x
    rhs = (L - p * ctx.inv(L % m, 2)) % m
    yield CheckPoint(lhs == rhs, wit(L=L, M=rep.y), lhs, rhs, m)


def _check_cj52(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    s1 = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(-8), p - 1, 2)
    s2 = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(-1, 8), p - 1, 2)
    if p % 4 == 3:
        yield CheckPoint(s1 % p == 0 and s2 % p == 0, wit(case="p === 3 mod 4"),
                         s1 % p, 0, p, lhs_parts=(s1, s2))
        return
    rep = normalize(find_rep(FormSpec(1, 1), p), NormalizationRule(x_mod=(4, 1)))
    x, y = rep.x, rep.y
    core_x = (2 * x - p * ctx.inv(2 * x % m, 2)) % m
    rhs1 = (-1) ** (((p - 1) // 4) % 2) * core_x % m
    yield CheckPoint(s1 == rhs1, wit(part="(-8)^k", x=x), s1, rhs1, m,
                     lhs_parts=(s1, s2))
    if p % 8 == 1:
        yy = y if y % 4 == 0 else -y
        rhs2 = (-1) ** ((yy // 4) % 2) * core_x % m
        w = wit(part="(-8)^-k", case="p === 1 mod 8", x=x, y=yy)
    else:
        yy = y if (y - 2) % 4 == 0 else -y
        rhs2 = (-1) ** (((yy - 2) // 4) % 2) * (2 * yy - p * ctx.inv(2 * yy % m, 2)) % m
        w = wit(part="(-8)^-k", case="p === 5 mod 8", x=x, y=yy)
    yield CheckPoint(s2 == rhs2, w, s2, rhs2, m, lhs_parts=(s1, s2))


def _check_cj53(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    sA = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(4), p - 1, 2)
    sB = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 2), F(-8), p - 1, 2)
    sC = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(1, 4), p - 1, 2)
    if p % 3 == 2:
        ok = sA % p == 0 and sB % p == 0 and sC % p == 0
        yield CheckPoint(ok, wit(case="p === 2 mod 3"), sA % p, 0, p,
                         lhs_parts=(sA, sB, sC))
        return
    rep = normalize(find_rep(FormSpec(1, 3), p), NormalizationRule(x_mod=(3, 1)))
    A, B = rep.x, rep.y
    if p % 12 == 1:
        core = (2 * A - p * ctx.inv(2 * A % m, 2)) % m
        r1 = (-1) ** ((((p - 1) // 4) + ((A - 1) // 2)) % 2) * core % m
        r2 = (-1) ** (((A - 1) // 2) % 2) * core % m
        w = {"case": "p === 1 mod 12", "A": A}
    else:
        BB = B if (B - 1) % 4 == 0 else -B
        r1 = ((-1) ** ((((p + 1) // 4) + ((BB - 1) // 2)) % 2)
              * (6 * BB - p * ctx.inv(2 * BB % m, 2)) % m)
        r2 = ((-1) ** (((BB - 1) // 2) % 2)
              * (3 * BB - p * ctx.inv(4 * BB % m, 2)) % m)
        w = {"case": "p === 7 mod 12", "B": BB}
    yield CheckPoint(sA == r1 and sB == r1, wit(part="4^k chain", **w), sA, r1, m,
                     lhs_parts=(sA, sB, sC))
    yield CheckPoint(sC == r2, wit(part="4^-k", **w), sC, r2, m,
                     lhs_parts=(sA, sB, sC))


def _check_cj54(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    sA = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(64), p - 1, 2)
    sB = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(1, 64), p - 1, 2)
    if p % 7 in (3, 5, 6):
        ok = sA % p == 0 and sB % p == 0
        yield CheckPoint(ok, wit(case="(p|7) = -1"), sA % p, 0, p, lhs_parts=(sA, sB))
        return
    rep = find_rep(FormSpec(1, 7), p)
    x, y = rep.x, rep.y
    if p % 4 == 1:
        r1 = (ctx.leg(2) * (-1) ** (((x - 1) // 2) % 2)
              * (2 * x - p * ctx.inv(2 * x % m, 2)) % m)
        r2 = ((-1) ** (((x - 1) // 2) % 2)
              * (2 * x - p * ctx.inv(2 * x % m, 2)) % m)
        w = {"case": "p === 1 mod 4", "x": x}
    else:
        r1 = (ctx.leg(2) * (-1) ** (((y - 1) // 2) % 2)
              * (42 * y - 3 * p * ctx.inv(2 * y % m, 2)) % m)
        r2 = (ctx.red(F(3, 4), 2) * (-1) ** (((y - 1) // 2) % 2)
              * (7 * y - p * ctx.inv(4 * y % m, 2)) % m)
        w = {"case": "p === 3 mod 4", "y": y}
    yield CheckPoint(sA == r1, wit(part="64^k", **w), sA, r1, m, lhs_parts=(sA, sB))
    yield CheckPoint(sB == r2, wit(part="64^-k", **w), sB, r2, m, lhs_parts=(sA, sB))


def _check_cj55(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    lhs = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 4), F(-1), p - 1, 2)
    cls = p % 8
    if cls in (5, 7):
        yield CheckPoint(lhs % p == 0, wit(case="p === 5,7 mod 8 (header case)"),
                         lhs % p, 0, p)
        return
    rep = find_rep(FormSpec(1, 2), p)
    x, y = rep.x, rep.y
    note = "header restricts to p === 5,7 mod 8; extra-header case list checked"
    if cls == 1:
        rhs = (-1) ** (((x + 1) // 2) % 2) * (2 * x - p * ctx.inv(2 * x % m, 2)) % m
        yield CheckPoint(lhs == rhs, wit(case="p === 1 mod 8", x=x, y=y), lhs, rhs, m,
                         note=note)
    else:
        rhs = (-1) ** (((y - 1) // 2) % 2) * (4 * y - p * ctx.inv(2 * y % m, 2)) % m
        yield CheckPoint(lhs == rhs, wit(case="p === 3 mod 8", x=x, y=y), lhs, rhs, m,
                         note=note)


def register(reg: dict[str, Statement]):
    reg["CJ5.1"] = Statement(
        "CJ5.1", "conjecture", 2,
        "sum C(-1/3,k)^2 9^k === L - p/L mod p^2 for 4p = L^2+27M^2, L === 2 mod 3",
        "Conjecture 5.1", mod_class(3, (1,)), _check_cj51)
    reg["CJ5.2"] = Statement(
        "CJ5.2", "conjecture", 2,
        "mod p^2 refinement of the (-8)^(+-k) evaluations", "Conjecture 5.2",
        always, _check_cj52)
    reg["CJ5.3"] = Statement(
        "CJ5.3", "conjecture", 2,
        "mod p^2 refinement of the 4^(+-k) evaluations via A^2+3B^2",
        "Conjecture 5.3", p_gt(3), _check_cj53)
    reg["CJ5.4"] = Statement(
        "CJ5.4", "conjecture", 2,
        "mod p^2 refinement of the 64^(+-k) evaluations via x^2+7y^2",
        "Conjecture 5.4", p_not(7), _check_cj54)
    reg["CJ5.5"] = Statement(
        "CJ5.5", "conjecture", 2,
        "alternating sum C(-1/4,k)^2 (-1)^k: full case list for all odd p",
        "Conjecture 5.5", always, _check_cj55)
