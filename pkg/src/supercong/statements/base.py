"""Statement machinery: contexts, grids, check points and RHS helpers."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from ..fastkernel import ModKernel
from ..padic import jacobi_symbol, least_residue, legendre_symbol
from ..tables import ModTables

F = Fraction

DEFAULT_COEFFWISE_MAX_P = 199
STRATIFIED_A_SIZE = 24
EXHAUSTIVE_B_MAX_P = 31
RANDOM_B_COUNT = 16

RATIONAL_A = (F(-1, 2), F(-1, 3), F(-2, 3), F(-1, 4), F(-3, 4), F(-1, 6),
              F(-5, 6), F(1, 2), F(1, 3), F(1, 4), F(1, 6))
T_GRID = (F(0), F(1), F(2), F(1, 2))
X_GRID = (F(0), F(1), F(2), F(-1), F(1, 2), F(1, 3), F(2, 3), F(5))


@dataclass
class CheckPoint:
    """One verified grid binding of a statement at one prime."""

    ok: bool
    witness: dict
    lhs: int
    rhs: int
    modulus: int
    lhs_parts: tuple = ()
    note: str = ""

    def __post_init__(self):
        if not self.lhs_parts:
            self.lhs_parts = (self.lhs,)


@dataclass(frozen=True)
class Statement:
    id: str
    kind: str  # theorem | corollary | lemma | identity | conjecture
    mod_exp: int
    summary: str
    anchor: str
    applicable: Callable[[int], str | None]
    check: Callable[["PrimeContext"], Iterator[CheckPoint]]


class PrimeContext:
    """Everything a statement check needs at one prime."""

    def __init__(self, p: int, seed: int = 0, exact: bool = False,
                 coeffwise_max_p: int = DEFAULT_COEFFWISE_MAX_P):
        self.p = p
        self.seed = seed
        self.coeffwise_max_p = coeffwise_max_p
        self.mod = ModKernel(p)
        if exact:
            from ..oracle import ExactKernel

            self.kernel = ExactKernel(p)
        else:
            self.kernel = self.mod

    # RHS-side arithmetic (always the modular tables, never the swappable kernel)

    def tables(self, e: int) -> ModTables:
        return self.mod.tables(e)

    def red(self, q, e: int) -> int:
        return self.tables(e).reduce(F(q))

    def inv(self, v: int, e: int) -> int:
        return self.tables(e).inverse(v)

    def modulus(self, e: int) -> int:
        return self.p**e

    def least(self, q) -> int:
        return least_residue(F(q), self.p)

    def leg(self, a: int) -> int:
        return legendre_symbol(a, self.p)

    def jac(self, a: int, n: int) -> int:
        return jacobi_symbol(a, n)

    def harm(self, n: int, e: int) -> int:
        return self.tables(e).harmonic[n]

    def qp(self, a: int) -> int:
        return (pow(a, self.p - 1, self.p * self.p) - 1) // self.p % self.p

    def rng(self, tag: str) -> random.Random:
        return random.Random(f"{self.seed}:{tag}:{self.p}")

    # grids

    def rational_a(self) -> list[Fraction]:
        return [a for a in RATIONAL_A if a.denominator % self.p != 0]

    def lift_a(self) -> list[Fraction]:
        return [F(i) for i in range(self.p)]

    def full_a(self) -> list[Fraction]:
        return self.rational_a() + self.lift_a()

    def stratified_a(self, tag: str, size: int = STRATIFIED_A_SIZE) -> list[Fraction]:
        p = self.p
        boundary = sorted({0, 1, 2, p - 2, p - 1} & set(range(p)))
        rng = self.rng(tag)
        pool = list(range(3, p - 2))
        extra = sorted(rng.sample(pool, min(size, len(pool)))) if pool else []
        lifts = sorted(set(boundary) | set(extra))
        return self.rational_a() + [F(i) for i in lifts]

    def b_grid(self, tag: str) -> list[Fraction]:
        if self.p <= EXHAUSTIVE_B_MAX_P:
            return [F(i) for i in range(self.p)]
        rng = self.rng(tag)
        lifts = sorted(rng.sample(range(self.p), RANDOM_B_COUNT))
        return [F(i) for i in lifts]

    def x_grid(self) -> list[Fraction]:
        return [x for x in X_GRID if x.denominator % self.p != 0]

    def t_grid(self) -> list[Fraction]:
        return [t for t in T_GRID if t.denominator % self.p != 0]


def wit(**kv) -> dict:
    """JSON-friendly witness dict: Fractions become strings."""
    out = {}
    for k, v in kv.items():
        if isinstance(v, Fraction):
            out[k] = str(v)
        elif isinstance(v, (list, tuple)):
            out[k] = [str(x) if isinstance(x, Fraction) else x for x in v]
        else:
            out[k] = v
    return out


def delta_p(a: Fraction, p: int) -> Fraction:
    """0 unless a === 0 (then a) or a === -1 (then -1-a) mod p."""
    a = F(a)
    la = least_residue(a, p)
    if la == 0:
        return a
    if la == p - 1:
        return -1 - a
    return F(0)


# -- applicability combinators -------------------------------------------------


def always(p: int) -> None:
    return None


def p_gt(bound: int):
    def guard(p: int):
        return None if p > bound else f"requires p > {bound}"

    return guard


def p_not(*bad: int):
    def guard(p: int):
        return f"p = {p} excluded by hypothesis" if p in bad else None

    return guard


def mod_class(modulus: int, allowed: tuple[int, ...], label: str = ""):
    def guard(p: int):
        if p % modulus in allowed:
            return None
        want = ",".join(map(str, allowed))
        return label or f"requires p === {want} (mod {modulus})"

    return guard


def all_of(*guards):
    def guard(p: int):
        for g in guards:
            r = g(p)
            if r is not None:
                return r
        return None

    return guard


def legendre_is(a: int, value: int):
    def guard(p: int):
        if a % p == 0:
            return f"({a}|p) undefined at p = {p}"
        if legendre_symbol(a, p) != value:
            return f"requires ({a}|p) = {value}"
        return None

    return guard
