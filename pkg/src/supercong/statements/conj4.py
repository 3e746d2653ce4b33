"""Conjectures 4.1-4.23: empirical sweeps, reported but never assumed."""

from __future__ import annotations

from fractions import Fraction

from ..quadforms import FormSpec, NormalizationRule, find_rep, sign_variants
from .base import (CheckPoint, F, PrimeContext, Statement, all_of, always,
                   legendre_is, mod_class, p_gt, p_not, wit)


def _match_any(ctx: PrimeContext, lhs: int, rep, rule, rhs_fn, e: int,
               extra: dict | None = None) -> CheckPoint:
    """PASS when some admissible sign choice matches; witness says which."""
    m = ctx.modulus(e)
    cands = []
    for x, y in sign_variants(rep, rule):
        v = rhs_fn(x, y) % m
        cands.append(((x, y), v))
    hit = next((sv for sv, v in cands if v == lhs), None)
    w = wit(**(extra or {}), form=f"{rep.form.c1},{rep.form.c2},x{rep.form.multiplier}",
            candidates=[f"({x},{y})->{v}" for (x, y), v in cands],
            matched=str(hit) if hit else None)
    rhs = dict(cands)[hit] if hit else (cands[0][1] if cands else 0)
    return CheckPoint(hit is not None, w, lhs, rhs, m)


def _zero_mod_p(ctx: PrimeContext, lhs2: int, extra: dict) -> CheckPoint:
    p = ctx.p
    lhs = lhs2 % p
    return CheckPoint(lhs == 0, wit(**extra), lhs, 0, p)


def _check_cj41(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    lhs = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 2), F(1, 4), p - 1, 2)
    if p % 4 == 3:
        yield CheckPoint(lhs == 0, wit(case="p === 3 mod 4"), lhs, 0, m)
        return
    rep = find_rep(FormSpec(1, 1), p)
    if p % 12 == 1:
        yield _match_any(ctx, lhs, rep, NormalizationRule(x_mod=(2, 1)),
                         lambda x, y: 2 * x - p * ctx.inv(2 * x % m, 2), 2,
                         {"case": "p === 1 mod 12"})
    else:
        yield _match_any(ctx, lhs, rep, NormalizationRule(x_mod=(2, 1)),
                         lambda x, y: 2 * y - p * ctx.inv(2 * y % m, 2), 2,
                         {"case": "p === 5 mod 12"})


def _check_cj42(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    s1 = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 2), F(-1, 3), p - 1, 2)
    s2 = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 2), F(1, 81), p - 1, 2)
    if p % 4 == 3:
        yield CheckPoint(s1 % p == 0 and s2 % p == 0, wit(case="p === 3 mod 4"),
                         s1 % p, 0, p, lhs_parts=(s1, s2))
        return
    rep = find_rep(FormSpec(1, 1), p)
    rule = NormalizationRule(x_mod=(2, 1))
    sgn = (-1) ** (((p - 1) // 4) % 2)
    chain = (s1 - sgn * s2) % m == 0
    for label, s in (("(-3)^-k member", s1), ("81^-k member", s2)):
        yield _match_any(ctx, s, rep, rule,
                         lambda x, y: 2 * x - p * ctx.inv(2 * x % m, 2), 2,
                         {"member": label, "printed_chain_held": chain})


def _check_cj43(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    lhs = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 2), F(-1, 80), p - 1, 2)
    if p % 4 == 3:
        yield _zero_mod_p(ctx, lhs, {"case": "p === 3 mod 4"})
        return
    rep = find_rep(FormSpec(1, 1), p)
    rule = NormalizationRule(x_mod=(2, 1))
    if p % 5 in (1, 4):
        yield _match_any(ctx, lhs, rep, rule,
                         lambda x, y: 2 * x - p * ctx.inv(2 * x % m, 2), 2,
                         {"case": "p === +-1 mod 5"})
    else:
        yield _match_any(ctx, lhs, rep, rule,
                         lambda x, y: 2 * y - p * ctx.inv(2 * y % m, 2), 2,
                         {"case": "p === +-2 mod 5"})


def _check_cj44(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    lhs = ctx.kernel.trunc_sum(F(-1, 4), F(-1, 2), F(2), p - 1, 2)
    if p % 8 in (5, 7):
        yield _zero_mod_p(ctx, lhs, {"case": "p === 5,7 mod 8"})
        return
    rep = find_rep(FormSpec(1, 2), p)
    yield _match_any(ctx, lhs, rep, NormalizationRule(x_mod=(4, 1)),
                     lambda x, y: 2 * x - p * ctx.inv(2 * x % m, 2), 2,
                     {"case": "p = x^2+2y^2"})


def _check_cj45(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    lhs = ctx.kernel.trunc_sum(F(-1, 6), F(-1, 3), F(1, 2), p - 1, 2)
    cls = p % 24
    if cls in (1, 7):
        rep = find_rep(FormSpec(1, 6), p)
        yield _match_any(ctx, lhs, rep, None,
                         lambda x, y: ctx.jac(x, 3) * (2 * x - p * ctx.inv(2 * x % m, 2)), 2,
                         {"case": "p = x^2+6y^2"})
    elif cls in (5, 11):
        rep = find_rep(FormSpec(2, 3), p)
        yield _match_any(ctx, lhs, rep, None,
                         lambda x, y: ctx.jac(x, 3) * (2 * x - p * ctx.inv(4 * x % m, 2)), 2,
                         {"case": "p = 2x^2+3y^2"})
    else:
        yield _zero_mod_p(ctx, lhs, {"case": "p === 13,17,19,23 mod 24"})


def _make_neg_disc(zval: Fraction, c2: int, jac_disc: int):
    """Shared shape of CJ4.6/4.8/4.9: 4p = x^2 + c2 y^2 or (p|disc) = -1."""

    def check(ctx: PrimeContext):
        p, m = ctx.p, ctx.modulus(2)
        lhs = ctx.kernel.trunc_sum(F(-1, 6), F(-1, 3), zval, p - 1, 2)
        rep = find_rep(FormSpec(1, c2, 4), p)
        if rep is not None:
            yield _match_any(ctx, lhs, rep, None,
                             lambda x, y: -ctx.jac(x, 3) * (x - p * ctx.inv(x % m, 2)), 2,
                             {"case": f"4p = x^2+{c2}y^2"})
        elif ctx.jac(p, jac_disc) == -1:
            yield _zero_mod_p(ctx, lhs, {"case": f"(p|{jac_disc}) = -1"})
        # no representation and (p|disc) != -1: the conjecture makes no claim

    return check


def _check_cj47(ctx: PrimeContext):
    p = ctx.p
    for z in (F(-1, 80), F(-1, 3024)):
        lhs = ctx.kernel.trunc_sum(F(-1, 6), F(-1, 3), z, p - 1, 1)
        yield CheckPoint(lhs == 0, wit(z=z), lhs, 0, p)


def _check_cj410(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    lhs = ctx.kernel.trunc_sum(F(-1, 3), F(-1, 6), F(-4), p - 1, 2)
    rep1 = find_rep(FormSpec(1, 15), p)
    rep2 = find_rep(FormSpec(5, 3), p)
    if rep1 is not None:
        yield _match_any(ctx, lhs, rep1, None,
                         lambda x, y: ctx.jac(x, 3) * (2 * x - p * ctx.inv(2 * x % m, 2)), 2,
                         {"case": "p = x^2+15y^2"})
    elif rep2 is not None:
        yield _match_any(ctx, lhs, rep2, None,
                         lambda x, y: -ctx.jac(x, 3) * (10 * x - p * ctx.inv(2 * x % m, 2)), 2,
                         {"case": "p = 5x^2+3y^2"})
    elif ctx.jac(p, 15) == -1:
        yield _zero_mod_p(ctx, lhs, {"case": "(p|15) = -1"})


def _check_cj411(ctx: PrimeContext):
    p = ctx.p
    lhs = ctx.kernel.trunc_sum(F(-1, 6), F(-2, 3), F(-1), p - 1, 1)
    yield CheckPoint(lhs == 0, wit(), lhs, 0, p)


def _check_cj412(ctx: PrimeContext):
    p = ctx.p
    for z in (F(1, 81), F(1, 3025)):
        lhs = ctx.kernel.trunc_sum(F(-1, 6), F(-2, 3), z, p - 1, 1)
        yield CheckPoint(lhs == 0, wit(z=z), lhs, 0, p)


def _check_cj413(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    a, c = F(-1, 2), F(-1, 3)
    s1 = ctx.kernel.trunc_sum(a, c, F(-3), p - 1, 2)
    s2 = ctx.kernel.trunc_sum(a, c, F(-1, 27), p - 1, 2)
    s3 = ctx.jac(p, 5) * ctx.kernel.trunc_sum(a, c, F(1, 5), p - 1, 2) % m
    s4 = ctx.leg(-1) * ctx.kernel.trunc_sum(a, c, F(2), p - 1, 2) % m
    members = {"(-3)^k": s1, "(-27)^-k": s2, "(p|5)5^-k": s3, "(-1|p)2^k": s4}
    strict_chain = len(set(members.values())) == 1
    if p % 3 == 1:
        rep = find_rep(FormSpec(1, 3), p)
        A = rep.x if (rep.x - 1) % 3 == 0 else -rep.x
        rhs = (2 * A - p * ctx.inv(2 * A % m, 2)) % m
        for label, s in members.items():
            yield CheckPoint(s == rhs, wit(member=label, A=A,
                                           strict_mod_p2_chain=strict_chain),
                             s, rhs, m, lhs_parts=(s1, s2, s3, s4))
    else:
        for label, s in members.items():
            yield CheckPoint(s % p == 0, wit(member=label, case="p === 2 mod 3",
                                             strict_mod_p2_chain=strict_chain),
                             s % p, 0, p, lhs_parts=(s1, s2, s3, s4))


def _check_cj414(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    lhs = ctx.kernel.trunc_sum(F(-1, 2), F(-1, 3), F(-1, 4), p - 1, 2)
    if p % 3 == 2:
        yield _zero_mod_p(ctx, lhs, {"case": "p === 2 mod 3"})
        return
    rep = find_rep(FormSpec(1, 3), p)
    A0, B0 = rep.x, rep.y
    An = A0 if (A0 - 1) % 3 == 0 else -A0
    if (A0 * B0) % 5 == 0:
        rhs = ctx.jac(p, 5) * (2 * An - p * ctx.inv(2 * An % m, 2)) % m
        yield CheckPoint(lhs == rhs, wit(case="5 | AB", A=An), lhs, rhs, m)
        return
    # the ratio constraint A/B === -1,-2 (mod 5) pins (A, B) only up to joint
    # negation; test both pairs and record which one matched
    cands = []
    for B in (B0, -B0):
        if (An * pow(B, -1, 5)) % 5 in (3, 4):
            for A2, B2 in ((An, B), (-An, -B)):
                v = ctx.jac(p, 5) * (A2 + 3 * B2 - p * ctx.inv((A2 + 3 * B2) % m, 2)) % m
                cands.append(((A2, B2), v))
    hit = next((pair for pair, v in cands if v == lhs), None)
    yield CheckPoint(hit is not None,
                     wit(case="A/B === -1,-2 mod 5",
                         candidates=[f"({a},{b})->{v}" for (a, b), v in cands],
                         matched=str(hit)),
                     lhs, cands[0][1] if cands else 0, m)


def _make_vanishing_pair(pairs, zval: Fraction):
    def check(ctx: PrimeContext):
        p = ctx.p
        for a, c in pairs:
            lhs = ctx.kernel.trunc_sum(a, c, zval, p - 1, 1)
            yield CheckPoint(lhs == 0, wit(a=a, c=c, z=zval), lhs, 0, p)

    return check


_EIGHTH_PAIRS = ((F(-1, 8), F(-5, 8)), (F(-3, 8), F(-7, 8)))


def register(reg: dict[str, Statement]):
    conj = []
    conj.append(("CJ4.1", always, _check_cj41,
                 "quarter-argument sum at z=1/4 vs p = x^2+y^2 (sign-free x)"))
    conj.append(("CJ4.2", p_not(3), _check_cj42,
                 "two-member chain at z=-1/3 and z=1/81 vs p = x^2+y^2"))
    conj.append(("CJ4.3", p_not(5), _check_cj43,
                 "sum at z=-1/80 vs p = x^2+y^2, split by p mod 5"))
    conj.append(("CJ4.4", p_gt(5), _check_cj44,
                 "sum at z=2 vs p = x^2+2y^2 with 4 | x-1"))
    conj.append(("CJ4.5", p_gt(3), _check_cj45,
                 "sum at z=1/2 vs x^2+6y^2 / 2x^2+3y^2 split mod 24"))
    conj.append(("CJ4.6", all_of(p_gt(3), p_not(17)), _make_neg_disc(F(-1, 16), 51, 51),
                 "sum at z=-1/16 vs 4p = x^2+51y^2"))
    conj.append(("CJ4.7", all_of(mod_class(6, (5,)), p_not(5, 7)), _check_cj47,
                 "two vanishing sums mod p for p === 5 mod 6"))
    conj.append(("CJ4.8", all_of(p_gt(3), p_not(41)), _make_neg_disc(F(-1, 1024), 123, 123),
                 "sum at z=-1/1024 vs 4p = x^2+123y^2"))
    conj.append(("CJ4.9", all_of(p_gt(3), p_not(5, 89)),
                 _make_neg_disc(F(-1, 250000), 267, 267),
                 "sum at z=-1/250000 vs 4p = x^2+267y^2"))
    conj.append(("CJ4.10", p_gt(5), _check_cj410,
                 "sum at z=-4 vs x^2+15y^2 / 5x^2+3y^2"))
    conj.append(("CJ4.11", mod_class(24, (13, 17, 19, 23)), _check_cj411,
                 "alternating sum vanishes mod p in four classes mod 24"))
    conj.append(("CJ4.12", all_of(mod_class(6, (5,)), p_not(5, 11)), _check_cj412,
                 "two vanishing sums mod p for p === 5 mod 6"))
    conj.append(("CJ4.13", p_gt(5), _check_cj413,
                 "four-member chain vs p = A^2+3B^2 with 3 | A-1"))
    conj.append(("CJ4.14", p_gt(5), _check_cj414,
                 "sum at z=-1/4 vs A^2+3B^2, cases 5|AB and A/B === -1,-2 mod 5"))
    conj.append(("CJ4.15", all_of(p_not(2, 5), legendre_is(-5, -1)),
                 _make_vanishing_pair(_EIGHTH_PAIRS, F(1, 5)),
                 "eighth-argument pair vanishes mod p when (-5|p) = -1"))
    conj.append(("CJ4.16", all_of(p_not(7), legendre_is(-1, -1)),
                 _make_vanishing_pair(_EIGHTH_PAIRS, F(1, 49)),
                 "eighth-argument pair vanishes mod p when (-1|p) = -1"))
    conj.append(("CJ4.17", all_of(p_gt(3), legendre_is(-6, -1)),
                 _make_vanishing_pair(_EIGHTH_PAIRS, F(-1, 8)),
                 "eighth-argument pair vanishes mod p when (-6|p) = -1"))
    conj.append(("CJ4.18", all_of(p_gt(5), legendre_is(-2, -1)),
                 _make_vanishing_pair(_EIGHTH_PAIRS, F(-1, 2400)),
                 "eighth-argument pair vanishes mod p when (-2|p) = -1"))
    conj.append(("CJ4.19", all_of(p_not(2, 5), legendre_is(-10, -1)),
                 _make_vanishing_pair(_EIGHTH_PAIRS, F(-1, 80)),
                 "eighth-argument pair vanishes mod p when (-10|p) = -1"))
    conj.append(("CJ4.20", all_of(p_not(2, 3, 19), legendre_is(-19, -1)),
                 _make_vanishing_pair(((F(-1, 12), F(-7, 12)),), F(1, 513)),
                 "twelfth-argument sum vanishes mod p when (-19|p) = -1"))
    conj.append(("CJ4.21", all_of(p_not(2, 3, 17), legendre_is(-51, -1)),
                 _make_vanishing_pair(((F(-1, 3), F(-5, 6)),), F(1, 17)),
                 "third/sixth-argument sum vanishes mod p when (-51|p) = -1"))
    conj.append(("CJ4.22", all_of(p_gt(3), legendre_is(-3, -1)),
                 _make_vanishing_pair(((F(-1, 3), F(-5, 6)),), F(1, 81)),
                 "third/sixth-argument sum vanishes mod p when (-3|p) = -1"))
    conj.append(("CJ4.23", all_of(p_gt(3), legendre_is(-6, -1)),
                 _make_vanishing_pair(((F(-1, 3), F(-5, 6)),), F(-1)),
                 "alternating third/sixth-argument sum vanishes mod p when (-6|p) = -1"))
    for sid, guard, check, summary in conj:
        reg[sid] = Statement(sid, "conjecture", 2 if sid in
                             ("CJ4.1", "CJ4.2", "CJ4.3", "CJ4.4", "CJ4.5", "CJ4.6",
                              "CJ4.8", "CJ4.9", "CJ4.10", "CJ4.13", "CJ4.14") else 1,
                             summary, f"Conjecture {sid[2:]}", guard, check)
