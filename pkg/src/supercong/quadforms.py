"""Binary quadratic form representations c1 x^2 + c2 y^2 = p (or 4p).

Right-hand sides in sections 3-5 draw on representations normalized by
congruence conditions such as 4 | x-1 or 3 | A-1; sign freedom that a rule
does not pin is enumerated by the statement harness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import Unsatisfiable


@dataclass(frozen=True)
class FormSpec:
    c1: int
    c2: int
    multiplier: int = 1  # target is multiplier * p

    def __post_init__(self):
        if self.c1 < 1 or self.c2 < 1 or self.multiplier not in (1, 4):
            raise ValueError("invalid form")


@dataclass(frozen=True)
class Representation:
    x: int
    y: int
    form: FormSpec
    prime: int

    def __post_init__(self):
        f = self.form
        if f.c1 * self.x * self.x + f.c2 * self.y * self.y != f.multiplier * self.prime:
            raise ValueError("not a representation")


@dataclass(frozen=True)
class NormalizationRule:
    """Congruence constraints on the signed coordinates, e.g. x === 1 (mod 4)."""

    x_mod: tuple[int, int] | None = None  # (modulus, residue)
    y_mod: tuple[int, int] | None = None

    def admits(self, x: int, y: int) -> bool:
        if self.x_mod and x % self.x_mod[0] != self.x_mod[1] % self.x_mod[0]:
            return False
        if self.y_mod and y % self.y_mod[0] != self.y_mod[1] % self.y_mod[0]:
            return False
        return True


def find_rep(form: FormSpec, p: int) -> Representation | None:
    """Exhaustive search for nonnegative (x, y); None when no representation.

    Among solutions the one with odd x is preferred (then smallest y): for the
    symmetric form x^2 + y^2 this picks the classical odd-x coordinate, and
    other forms have a unique nonnegative solution anyway.
    """
    target = form.multiplier * p
    sols = []
    y = 0
    while form.c2 * y * y <= target:
        rem = target - form.c2 * y * y
        if rem % form.c1 == 0:
            x = math.isqrt(rem // form.c1)
            if form.c1 * x * x == rem:
                sols.append((x, y))
        y += 1
    if not sols:
        return None
    for x, y in sols:
        if x % 2 == 1:
            return Representation(x, y, form, p)
    x, y = sols[0]
    return Representation(x, y, form, p)


def sign_variants(rep: Representation, rule: NormalizationRule | None = None):
    """All (+-x, +-y) meeting the rule; unconstrained zero coords stay once."""
    xs = (rep.x,) if rep.x == 0 else (rep.x, -rep.x)
    ys = (rep.y,) if rep.y == 0 else (rep.y, -rep.y)
    out = []
    for x in xs:
        for y in ys:
            if rule is None or rule.admits(x, y):
                out.append((x, y))
    return out


def normalize(rep: Representation, rule: NormalizationRule) -> Representation:
    """Flip signs so the rule holds; unconstrained coordinates stay nonnegative."""
    variants = sign_variants(rep, rule)
    if not variants:
        raise Unsatisfiable(f"no sign choice of ({rep.x}, {rep.y}) satisfies {rule}")
    if rule.x_mod is None:
        variants = [v for v in variants if v[0] >= 0] or variants
    if rule.y_mod is None:
        variants = [v for v in variants if v[1] >= 0] or variants
    x, y = variants[0]
    return Representation(x, y, rep.form, rep.prime)
