"""Statements from sections 1-2: symmetry of P_{p-1}(a, x) and its corollaries."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..padic import Residue, RingSpec, div_by_p
from .base import (CheckPoint, F, PrimeContext, Statement, all_of, always,
                   delta_p, mod_class, p_gt, wit)

_RATIONAL_INSTANCES = {
    "E1.3": (F(-1, 2), F(-1, 2), -1),
    "E1.4": (F(-1, 3), F(-2, 3), -3),
    "E1.5": (F(-1, 4), F(-3, 4), -2),
    "E1.6": (F(-1, 6), F(-5, 6), -1),
}


def _check_rv(a, c, sym):
    def check(ctx: PrimeContext):
        m = ctx.modulus(2)
        lhs = ctx.kernel.trunc_sum(a, c, F(1), ctx.p - 1, 2)
        rhs = ctx.leg(sym) % m
        yield CheckPoint(lhs == rhs, wit(a=a, c=c, legendre_of=sym), lhs, rhs, m)

    return check


def _t21_rhs(ctx: PrimeContext, a: Fraction, x: Fraction) -> int:
    p, m = ctx.p, ctx.modulus(3)
    la = ctx.least(a)
    pow_term = pow(ctx.red((x - 1) / 2, 3), p, m)
    if la == 0:
        return ctx.red(-2 * a * (p + a + 1), 3) * pow_term % m
    if la == p - 1:
        return ctx.red(2 * (a + 1) * (a - p), 3) * pow_term % m
    t = (a - la) / p
    w = (F(1, la) + F(1, la + 1)) * t * (1 + t)
    return (-2 * p * p) % m * ctx.red(w, 3) % m * pow_term % m


def _check_t21(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(3)
    a_grid = ctx.full_a()
    for t in (F(1), F(2), F(1, 2)):
        if t.denominator % p == 0:
            continue
        a_grid += [p * t, -1 + p * t]
    trips: list[Fraction] = []
    for a in a_grid:
        trips += [a - 1, a, a + 1]
    cs = [F(-1) - v for v in trips]
    for x in ctx.x_grid():
        vals = ctx.kernel.trunc_sum_batch(trips, cs, (1 - x) / 2, p - 1, 3)
        for i, a in enumerate(a_grid):
            pm, p0, pp = vals[3 * i], vals[3 * i + 1], vals[3 * i + 2]
            lhs = (ctx.red(a + 1, 3) * pp - ctx.red((2 * a + 1) * x, 3) * p0
                   + ctx.red(a, 3) * pm) % m
            rhs = _t21_rhs(ctx, a, x)
            yield CheckPoint(lhs == rhs, wit(a=a, x=x, case=ctx.least(a)),
                             lhs, rhs, m, lhs_parts=(pm, p0, pp))


def _check_l22(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    for t in ctx.t_grid():
        a = p * t
        for x in ctx.x_grid():
            lhs = ctx.kernel.trunc_sum(a, -1 - a, (1 - x) / 2, p - 1, 2)
            up = pow(ctx.red((1 + x) / 2, 2), p, m)
            dn = pow(ctx.red((1 - x) / 2, 2), p, m)
            rhs = (ctx.red(1 - t, 2) + ctx.red(t, 2) * (up + dn)) % m
            yield CheckPoint(lhs == rhs, wit(t=t, x=x), lhs, rhs, m)


def _check_l23(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    for t in ctx.t_grid():
        a = 1 + p * t
        for x in ctx.x_grid():
            lhs = ctx.kernel.trunc_sum(a, -1 - a, (1 - x) / 2, p - 1, 2)
            up = pow(ctx.red((1 + x) / 2, 2), p, m)
            dn = pow(ctx.red((1 - x) / 2, 2), p, m)
            half = ctx.red((x - 1) / 2, 2)
            rhs = (ctx.red((1 - t) * x, 2) + ctx.red(p * t, 2) * half
                   + ctx.red(t, 2) * ((p + 1) * half % m * ((up + dn) % m)
                                      + (p + 1) * (p + 1) % m * dn
                                      + ctx.red((1 + x) / 2, 2) * up
                                      - ctx.red((1 - x) / 2, 2) * dn)) % m
            yield CheckPoint(lhs == rhs, wit(t=t, x=x), lhs, rhs, m)


def _check_t22(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    if p <= ctx.coeffwise_max_p:
        grid = ctx.full_a()
        rows = ctx.kernel.pn_coeffs_batch(grid, 2)
        for a, row in zip(grid, rows):
            parity = ctx.least(a) % 2
            bad = [j for j in range(len(row)) if j % 2 != parity and int(row[j]) != 0]
            ok = not bad
            j0 = bad[0] if bad else None
            yield CheckPoint(
                ok, wit(a=a, mode="coefficientwise", bad_coeff_index=j0),
                int(row[j0]) if bad else 0, 0, m,
                lhs_parts=tuple(int(v) for v in row))
    else:
        grid = ctx.stratified_a("T2.2")
        pos, neg = ctx.mod.pn_values_all_x(grid, 2)
        for i, a in enumerate(grid):
            sign = 1 if ctx.least(a) % 2 == 0 else -1
            diff = (pos[i] - sign * neg[i]) % m
            bad = np.nonzero(diff)[0]
            ok = bad.size == 0
            yield CheckPoint(
                ok, wit(a=a, mode="pointwise-all-x",
                        bad_x=int(bad[0]) if bad.size else None),
                int(diff[bad[0]]) if bad.size else 0, 0, m, lhs_parts=())
    # restatement: sum C(a,k)C(-1-a,k)(x^k - (-1)^<a>(1-x)^k) === 0, on the x grid
    grid = ctx.rational_a() if p > ctx.coeffwise_max_p else ctx.full_a()
    cs = [F(-1) - a for a in grid]
    for x in ctx.x_grid():
        s1 = ctx.kernel.trunc_sum_batch(grid, cs, x, p - 1, 2)
        s2 = ctx.kernel.trunc_sum_batch(grid, cs, 1 - x, p - 1, 2)
        for a, v1, v2 in zip(grid, s1, s2):
            sign = 1 if ctx.least(a) % 2 == 0 else -1
            ok = (v1 - sign * v2) % m == 0
            yield CheckPoint(ok, wit(a=a, x=x, mode="restatement"),
                             v1, sign * v2 % m, m, lhs_parts=(v1, v2))


def _check_c21(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    coeffwise = p <= ctx.coeffwise_max_p
    centers = [a for a in (ctx.full_a() if coeffwise else ctx.stratified_a("C2.1"))
               if ctx.least(a) not in (0, p - 1)]
    trips: list[Fraction] = []
    for a in centers:
        trips += [a - 1, a, a + 1]
    rows = ctx.kernel.pn_coeffs_batch(trips, 2)
    if not isinstance(rows, np.ndarray):
        rows = np.array(rows, dtype=object)
    for i, a in enumerate(centers):
        rm, r0, rp = rows[3 * i], rows[3 * i + 1], rows[3 * i + 2]
        comb = [0] * p
        ca1 = ctx.red(a + 1, 2)
        c2a1 = ctx.red(2 * a + 1, 2)
        ca = ctx.red(a, 2)
        for j in range(p):
            up = (j + 1)
            d_p = int(rp[j + 1]) * up % m if j + 1 < p else 0
            d_m = int(rm[j + 1]) * up % m if j + 1 < p else 0
            d_0 = int(r0[j + 1]) * up % m if j + 1 < p else 0
            xd0 = j * int(r0[j]) % m
            comb[j] = (ca1 * d_p - c2a1 * xd0 - c2a1 * int(r0[j]) + ca * d_m) % m
        if coeffwise:
            bad = [j for j in range(p) if comb[j] != 0]
            ok = not bad
            yield CheckPoint(ok, wit(a=a, mode="coefficientwise",
                                     bad_coeff_index=bad[0] if bad else None),
                             comb[bad[0]] if bad else 0, 0, m,
                             lhs_parts=tuple(int(v) for v in rm) + tuple(int(v) for v in r0)
                             + tuple(int(v) for v in rp))
        else:
            vals = ctx.mod.poly_eval_all_x(np.asarray([comb], dtype=np.int64), 2)[0]
            bad = np.nonzero(vals)[0]
            ok = bad.size == 0
            yield CheckPoint(ok, wit(a=a, mode="pointwise-all-x",
                                     bad_x=int(bad[0]) if bad.size else None),
                             int(vals[bad[0]]) if bad.size else 0, 0, m, lhs_parts=())


def _check_c22(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    grid = ctx.full_a()
    vals = ctx.kernel.trunc_sum_batch(grid, [F(-1) - a for a in grid], F(1), p - 1, 2)
    for a, lhs in zip(grid, vals):
        rhs = 1 if ctx.least(a) % 2 == 0 else m - 1
        yield CheckPoint(lhs == rhs, wit(a=a), lhs, rhs, m)


def _check_c23(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    grid = [a for a in ctx.full_a() if ctx.least(a) % 2 == 1]
    vals = ctx.kernel.trunc_sum_batch(grid, [F(-1) - a for a in grid], F(1, 2), p - 1, 2)
    for a, lhs in zip(grid, vals):
        yield CheckPoint(lhs == 0, wit(a=a), lhs, 0, m)


def _check_vanishing_half(a, c):
    """(2.3)-(2.6): sum C(a,k)C(c,k)/2^k === 0 mod p^2 in the stated class."""

    def check(ctx: PrimeContext):
        m = ctx.modulus(2)
        lhs = ctx.kernel.trunc_sum(a, c, F(1, 2), ctx.p - 1, 2)
        yield CheckPoint(lhs == 0, wit(a=a), lhs, 0, m)

    return check


def _check_t23(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    coeffwise = p <= ctx.coeffwise_max_p
    grid = ctx.full_a() if coeffwise else ctx.stratified_a("T2.3")
    cs = [F(-1) - a for a in grid]
    # part 1: m-th choose-weighted symmetry, evaluated on the x grid
    xs = ctx.x_grid()
    for mm in (1, 2, 3):
        if mm >= p:
            continue
        for x in xs:
            v1 = _choose_pow_batch(ctx, grid, cs, mm, x)
            v2 = _choose_pow_batch(ctx, grid, cs, mm, 1 - x)
            for a, s1, s2 in zip(grid, v1, v2):
                sign = (-1) ** ((mm + ctx.least(a)) % 2)
                ok = (s1 - sign * s2) % m == 0
                yield CheckPoint(ok, wit(a=a, m=mm, x=x, part=1),
                                 s1, sign * s2 % m, m, lhs_parts=(s1, s2))
    # part 2: the integrated form with the delta correction
    for x in ctx.x_grid():
        sigmas = [1 if ctx.least(a) % 2 == 0 else -1 for a in grid]
        vals = ctx.kernel.recip_sum_batch(grid, cs, x, sigmas, 2)
        for a, lhs in zip(grid, vals):
            rhs = _t23_part2_rhs(ctx, a, x)
            yield CheckPoint(lhs == rhs, wit(a=a, x=x, part=2), lhs, rhs, m)


def _choose_pow_batch(ctx: PrimeContext, grid, cs, mm: int, x: Fraction) -> list[int]:
    """sum_{k>=m} C(a,k)C(c,k) C(k,m) x^(k-m) for each a."""
    return ctx.kernel.choose_pow_batch(grid, cs, mm, x, 2)


def _t23_part2_rhs(ctx: PrimeContext, a: Fraction, x: Fraction) -> int:
    """Main term by residue class of a, minus delta_p(a) (x^p-(x-1)^p-1)/p."""
    p, m = ctx.p, ctx.modulus(2)
    la = ctx.least(a)
    if la == 0:
        main = ctx.red(1 - 2 * a, 2)
    elif la == p - 1:
        main = ctx.red(2 * a + 3, 2)
    else:
        main = 0
    d = delta_p(a, p)
    if d == 0:
        return main
    m3 = ctx.modulus(3)
    u = (pow(ctx.red(x, 3), p, m3) - pow(ctx.red(x - 1, 3), p, m3) - 1) % m3
    phi = div_by_p(Residue(u, RingSpec(p, 3))).value
    return (main - ctx.red(d, 2) * phi) % m


def _check_c24(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    grid = ctx.full_a() if p <= ctx.coeffwise_max_p else ctx.stratified_a("C2.4")
    cs = [F(-1) - a for a in grid]
    tb = ctx.tables(2)
    for mm in (1, 2, 3):
        if mm >= p:
            continue
        vals = ctx.kernel.choose_sum_batch(grid, cs, mm, 2)
        for a, lhs in zip(grid, vals):
            rhs = (tb.binom_falling(a, mm) * tb.binom_falling(-1 - a, mm)
                   * (-1) ** ((mm + ctx.least(a)) % 2)) % m
            yield CheckPoint(lhs == rhs, wit(a=a, m=mm), lhs, rhs, m)


def _t24_families(ctx: PrimeContext) -> list[tuple[str, list[int]]]:
    p, m = ctx.p, ctx.modulus(2)
    fams = [("central/4^k", list(ctx.tables(2).central_over_4k))]
    for j in range(4):
        fams.append((f"m^{j}", [pow(k, j, m) for k in range(p)]))
    rng = ctx.rng("T2.4")
    fams.append(("seeded-random", [rng.randrange(m) for _ in range(p)]))
    return fams


def _check_t24(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    grid = ctx.full_a() if p <= ctx.coeffwise_max_p else ctx.stratified_a("T2.4")
    cs = [F(-1) - a for a in grid]
    tb = ctx.tables(2)
    B = tb.binom_matrix if p * p < (1 << 31) else None
    for name, f in _t24_families(ctx):
        fv = [v % m for v in f]
        if B is not None:
            fa = np.asarray(fv, dtype=np.int64)
            signs = np.where(np.arange(p) % 2 == 0, 1, m - 1).astype(np.int64)
            g = (B @ (fa * signs % m)) % m
            g = [int(v) for v in g]
        else:
            g = []
            for k in range(p):
                acc, cb = 0, 1
                for j in range(k + 1):
                    acc = (acc + (cb if j % 2 == 0 else -cb) * fv[j]) % m
                    cb = cb * (k - j) % m * tb.inv[j + 1] % m
                g.append(acc)
        w_plus = [(fk - gk) % m for fk, gk in zip(fv, g)]
        w_minus = [(-fk - gk) % m for fk, gk in zip(fv, g)]
        even = [a for a in grid if ctx.least(a) % 2 == 0]
        odd = [a for a in grid if ctx.least(a) % 2 == 1]
        for sub, w in ((even, w_plus), (odd, w_minus)):
            if not sub:
                continue
            vals = ctx.kernel.dot_ints_batch(sub, [F(-1) - a for a in sub], w, 2)
            for a, lhs in zip(sub, vals):
                yield CheckPoint(lhs == 0, wit(a=a, family=name), lhs, 0, m)


def _check_t25(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    grid = [a for a in ctx.full_a() if ctx.least(a) % 2 == 1]
    vals = ctx.kernel.central_sum_batch(grid, [F(-1) - a for a in grid], 2)
    for a, lhs in zip(grid, vals):
        yield CheckPoint(lhs == 0, wit(a=a), lhs, 0, m)


def _check_central_instance(a, c):
    def check(ctx: PrimeContext):
        m = ctx.modulus(2)
        lhs = ctx.kernel.central_sum(a, c, 2)
        yield CheckPoint(lhs == 0, wit(a=a), lhs, 0, m)

    return check


def _check_i21(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    rng = ctx.rng("I2.1")
    tb = ctx.tables(2)
    for _ in range(12):
        a = F(rng.randint(-12, 12), rng.choice([1, 2, 3, 5]))
        x = F(rng.randint(-12, 12), rng.choice([1, 2, 3]))
        n = rng.randint(1, p - 1)
        if a.denominator % p == 0 or x.denominator % p == 0:
            continue
        z = (1 - x) / 2
        sm = ctx.kernel.trunc_sum(a - 1, -a, z, n, 2)
        s0 = ctx.kernel.trunc_sum(a, -1 - a, z, n, 2)
        sp = ctx.kernel.trunc_sum(a + 1, -2 - a, z, n, 2)
        lhs = (ctx.red(a + 1, 2) * sp - ctx.red((2 * a + 1) * x, 2) * s0
               + ctx.red(a, 2) * sm) % m
        rhs = (ctx.red(-2 * (2 * a + 1), 2) * tb.binom_falling(a, n)
               % m * tb.binom_falling(a + n, n)
               % m * pow(ctx.red((x - 1) / 2, 2), n + 1, m)) % m
        yield CheckPoint(lhs == rhs, wit(a=a, x=x, n=n), lhs, rhs, m,
                         lhs_parts=(sm, s0, sp))


def _check_i24(ctx: PrimeContext):
    p, m = ctx.p, ctx.modulus(2)
    rng = ctx.rng("I2.4")
    tb = ctx.tables(2)
    for _ in range(12):
        a = F(rng.randint(-12, 12), rng.choice([1, 2, 3, 5]))
        n = rng.randint(1, p - 2) if p > 3 else 1
        if a.denominator % p == 0:
            continue
        lhs = ctx.kernel.recip_sum(a, -1 - a, F(1), 0, 2, n)
        rhs = (tb.binom_falling(a - 1, n) * tb.binom_falling(-2 - a, n)
               % m * tb.inverse((n + 1) % m)) % m
        yield CheckPoint(lhs == rhs, wit(a=a, n=n), lhs, rhs, m)


def register(reg: dict[str, Statement]):
    for sid, (a, c, sym) in _RATIONAL_INSTANCES.items():
        guard = p_gt(3) if a.denominator in (3, 6) else always
        reg[sid] = Statement(
            sid, "theorem", 2,
            f"truncated sum of C({a},k)C({c},k) is the Legendre symbol ({sym}|p) mod p^2",
            f"Eq ({sid[1:]})", guard, _check_rv(a, c, sym))
    reg["T2.1"] = Statement(
        "T2.1", "theorem", 3,
        "three-term contiguous relation for P_{p-1}(a, x) evaluated mod p^3, three residue cases",
        "Theorem 2.1", always, _check_t21)
    reg["L2.2"] = Statement(
        "L2.2", "lemma", 2,
        "P_{p-1}(pt, x) closed form mod p^2", "Lemma 2.2", always, _check_l22)
    reg["L2.3"] = Statement(
        "L2.3", "lemma", 2,
        "P_{p-1}(1+pt, x) closed form mod p^2", "Lemma 2.3", always, _check_l23)
    reg["T2.2"] = Statement(
        "T2.2", "theorem", 2,
        "P_{p-1}(a, x) === (-1)^<a> P_{p-1}(a, -x) mod p^2 (coefficientwise), plus restatement",
        "Theorem 2.2", always, _check_t22)
    reg["C2.1"] = Statement(
        "C2.1", "corollary", 2,
        "derivative form of the contiguous relation vanishes mod p^2 for a !== 0, -1",
        "Corollary 2.1", always, _check_c21)
    reg["C2.2"] = Statement(
        "C2.2", "corollary", 2,
        "sum C(a,k)C(-1-a,k) === (-1)^<a> mod p^2", "Corollary 2.2", always, _check_c22)
    reg["C2.3"] = Statement(
        "C2.3", "corollary", 2,
        "sum C(a,k)C(-1-a,k)/2^k === 0 mod p^2 when <a> is odd",
        "Corollary 2.3", always, _check_c23)
    for sid, (a, c, cls) in {
        "E2.3": (F(-1, 2), F(-1, 2), mod_class(4, (3,))),
        "E2.4": (F(-1, 3), F(-2, 3), mod_class(3, (2,))),
        "E2.5": (F(-1, 4), F(-3, 4), mod_class(8, (5, 7))),
        "E2.6": (F(-1, 6), F(-5, 6), mod_class(4, (3,))),
    }.items():
        reg[sid] = Statement(
            sid, "corollary", 2,
            f"half-argument sum with a={a} vanishes mod p^2 in its residue class",
            f"Eq ({sid[1:]})", all_of(p_gt(3), cls), _check_vanishing_half(a, c))
    reg["T2.3"] = Statement(
        "T2.3", "theorem", 2,
        "choose-weighted symmetry (part 1) and integrated form with delta correction (part 2)",
        "Theorem 2.3", always, _check_t23)
    reg["C2.4"] = Statement(
        "C2.4", "corollary", 2,
        "sum_{k>=m} C(a,k)C(-1-a,k)C(k,m) === (-1)^(m+<a>) C(a,m)C(-1-a,m) mod p^2",
        "Corollary 2.4", always, _check_c24)
    reg["T2.4"] = Statement(
        "T2.4", "theorem", 2,
        "alternating binomial transform pairing vanishes mod p^2 for residue-valued f",
        "Theorem 2.4", always, _check_t24)
    reg["T2.5"] = Statement(
        "T2.5", "theorem", 2,
        "central-binomial weighted sum vanishes mod p^2 when <a> is odd",
        "Theorem 2.5", always, _check_t25)
    for sid, (a, c, cls) in {
        "E2.7": (F(-1, 2), F(-1, 2), mod_class(4, (3,))),
        "E2.8": (F(-1, 3), F(-2, 3), mod_class(6, (5,))),
        "E2.9": (F(-1, 4), F(-3, 4), mod_class(8, (5, 7))),
        "E2.10": (F(-1, 6), F(-5, 6), mod_class(4, (3,))),
    }.items():
        reg[sid] = Statement(
            sid, "theorem", 2,
            f"central-binomial weighted sum with a={a} vanishes mod p^2 in its class",
            f"Eq ({sid[1:]})", all_of(p_gt(3), cls), _check_central_instance(a, c))
    reg["I2.1"] = Statement(
        "I2.1", "identity", 2,
        "contiguous relation for P_n(a, x) as an in-ring identity on seeded tuples",
        "Lemma 2.1", always, _check_i21)
    reg["I2.4"] = Statement(
        "I2.4", "identity", 2,
        "reciprocal-weighted partial sum telescopes to a closed binomial form",
        "Lemma 2.4", always, _check_i24)
