"""Registry of all catalog statements and the verification engine."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from ..errors import CongruenceError, UnknownStatement
from ..padic import odd_primes
from ..report import Report, VerificationOutcome
from .base import (DEFAULT_COEFFWISE_MAX_P, CheckPoint, PrimeContext, Statement,
                   delta_p)
from . import conj4, conj5, sec2, sec3, sec4, sec5

REGISTRY: dict[str, Statement] = {}
for _mod in (sec2, sec3, sec4, sec5, conj4, conj5):
    _mod.register(REGISTRY)

THEOREM_KINDS = ("theorem", "corollary", "lemma", "identity")


def all_ids() -> list[str]:
    return sorted(REGISTRY)


def get_statement(sid: str) -> Statement:
    try:
        return REGISTRY[sid]
    except KeyError:
        raise UnknownStatement(f"unknown statement id {sid!r}") from None


def applicability(sid: str, p: int) -> str | None:
    """None when applicable, otherwise the skip reason."""
    return get_statement(sid).applicable(p)


def make_context(p: int, seed: int = 0, exact: bool = False,
                 coeffwise_max_p: int = DEFAULT_COEFFWISE_MAX_P) -> PrimeContext:
    return PrimeContext(p, seed=seed, exact=exact, coeffwise_max_p=coeffwise_max_p)


def verify_one(sid: str, p: int, ctx: PrimeContext | None = None, seed: int = 0,
               coeffwise_max_p: int = DEFAULT_COEFFWISE_MAX_P) -> VerificationOutcome:
    stmt = get_statement(sid)
    modulus = p**stmt.mod_exp
    reason = stmt.applicable(p)
    if reason is not None:
        return VerificationOutcome(id=sid, kind=stmt.kind, p=p, status="SKIP",
                                   modulus=modulus, skip_reason=reason)
    if ctx is None:
        ctx = make_context(p, seed=seed, coeffwise_max_p=coeffwise_max_p)
    first: CheckPoint | None = None
    count = 0
    try:
        for pt in stmt.check(ctx):
            count += 1
            if first is None:
                first = pt
            if not pt.ok:
                return VerificationOutcome(
                    id=sid, kind=stmt.kind, p=p, status="FAIL", modulus=pt.modulus,
                    lhs=pt.lhs, rhs=pt.rhs,
                    witness=dict(pt.witness, **({"note": pt.note} if pt.note else {})))
    except CongruenceError as exc:
        return VerificationOutcome(id=sid, kind=stmt.kind, p=p, status="SKIP",
                                   modulus=modulus,
                                   skip_reason=f"{type(exc).__name__}: {exc}")
    if count == 0:
        return VerificationOutcome(id=sid, kind=stmt.kind, p=p, status="SKIP",
                                   modulus=modulus,
                                   skip_reason="no applicable grid points at this prime")
    return VerificationOutcome(
        id=sid, kind=stmt.kind, p=p, status="PASS", modulus=first.modulus,
        lhs=first.lhs, rhs=first.rhs,
        witness=dict(first.witness, points=count,
                     **({"note": first.note} if first.note else {})))


def _verify_chunk(args) -> list[VerificationOutcome]:
    primes_chunk, ids, seed, coeffwise_max_p = args
    out = []
    for p in primes_chunk:
        ctx = make_context(p, seed=seed, coeffwise_max_p=coeffwise_max_p)
        for sid in ids:
            out.append(verify_one(sid, p, ctx=ctx))
    return out


def verify_range(ids: list[str] | None, prime_lo: int, prime_hi: int, *,
                 seed: int = 0, jobs: int = 1,
                 coeffwise_max_p: int = DEFAULT_COEFFWISE_MAX_P,
                 config: dict | None = None) -> Report:
    """Sweep the (id, prime) grid; outcomes sorted by (id, p) regardless of jobs."""
    if ids is None:
        ids = all_ids()
    else:
        for sid in ids:
            get_statement(sid)
    primes = odd_primes(prime_lo, prime_hi)
    outcomes: list[VerificationOutcome] = []
    if jobs <= 1 or len(primes) <= 1:
        for p in primes:
            ctx = make_context(p, seed=seed, coeffwise_max_p=coeffwise_max_p)
            for sid in ids:
                outcomes.append(verify_one(sid, p, ctx=ctx))
    else:
        chunks = [primes[i::jobs] for i in range(jobs)]
        tasks = [(c, ids, seed, coeffwise_max_p) for c in chunks if c]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for res in pool.map(_verify_chunk, tasks):
                outcomes.extend(res)
    cfg = dict(config or {})
    cfg.setdefault("ids", ids)
    cfg.setdefault("primes", [prime_lo, prime_hi])
    cfg.setdefault("seed", seed)
    cfg.setdefault("coeffwise_max_p", coeffwise_max_p)
    return Report(outcomes, config=cfg)


__all__ = [
    "REGISTRY", "THEOREM_KINDS", "all_ids", "applicability", "delta_p",
    "get_statement", "make_context", "verify_one", "verify_range",
]
