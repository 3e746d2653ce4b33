"""Command-line entry point: statement discovery, prime sweeps, reports.

Exit codes: 0 clean, 1 theorem-kind FAIL or internal error, 2 conjecture-kind
FAIL only, 64 usage error.  Reports are deterministic for a fixed seed; wall
time is printed to stderr only.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from .errors import CongruenceError, UnknownStatement
from .oracle import DEFAULT_ORACLE_MAX_P, cross_check
from .padic import is_prime, odd_primes
from .quadforms import FormSpec, find_rep, sign_variants
from .report import Report
from .statements import (REGISTRY, all_ids, get_statement, verify_range)
from .statements.base import DEFAULT_COEFFWISE_MAX_P

USAGE_ERROR = 64


@dataclass
class RunConfig:
    command: str
    ids: list[str] | None = None
    prime_lo: int = 3
    prime_hi: int = 100
    fmt: str = "text"
    out: str | None = None
    jobs: int = 1
    seed: int = 0
    coeffwise_max_p: int = DEFAULT_COEFFWISE_MAX_P
    oracle_max_p: int = DEFAULT_ORACLE_MAX_P
    represent: tuple[int, int, int, int] | None = None  # c1, c2, mult, p


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(message)


def _build_parser() -> _Parser:
    ap = _Parser(prog="supercong", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="table of statement ids, kinds, moduli, hypotheses")

    v = sub.add_parser("verify", help="sweep statements over a prime range")
    v.add_argument("--ids", default="all", help="comma-separated ids, or 'all'")
    v.add_argument("--primes", required=True, help="range lo:hi (inclusive)")
    v.add_argument("--format", dest="fmt", default="text",
                   choices=("json", "csv", "text"))
    v.add_argument("--out", default=None, help="write the report to this file")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--coeffwise-max-p", type=int, default=DEFAULT_COEFFWISE_MAX_P)

    o = sub.add_parser("oracle-check", help="exact-rational cross-check of the LHS pipeline")
    o.add_argument("--pmax", type=int, default=DEFAULT_ORACLE_MAX_P)
    o.add_argument("--ids", default="all")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--format", dest="fmt", default="text",
                   choices=("json", "csv", "text"))
    o.add_argument("--out", default=None)

    r = sub.add_parser("represent", help="find and normalize c1 x^2 + c2 y^2 = mult*p")
    r.add_argument("--c1", type=int, required=True)
    r.add_argument("--c2", type=int, required=True)
    r.add_argument("--mult", type=int, default=1, choices=(1, 4))
    r.add_argument("--p", type=int, required=True)
    return ap


def parse_args(argv: list[str]) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    cfg = RunConfig(command=ns.command)
    if ns.command == "verify":
        cfg.ids = None if ns.ids == "all" else [s.strip() for s in ns.ids.split(",") if s.strip()]
        try:
            lo, hi = ns.primes.split(":")
            cfg.prime_lo, cfg.prime_hi = int(lo), int(hi)
        except ValueError:
            raise _ArgError(f"bad --primes value {ns.primes!r}, expected lo:hi")
        if not 3 <= cfg.prime_lo <= cfg.prime_hi:
            raise _ArgError("need 3 <= prime_lo <= prime_hi")
        cfg.fmt, cfg.out, cfg.jobs = ns.fmt, ns.out, ns.jobs
        cfg.seed, cfg.coeffwise_max_p = ns.seed, ns.coeffwise_max_p
        if cfg.jobs < 1:
            raise _ArgError("--jobs must be >= 1")
    elif ns.command == "oracle-check":
        cfg.ids = None if ns.ids == "all" else [s.strip() for s in ns.ids.split(",") if s.strip()]
        cfg.oracle_max_p = ns.pmax
        cfg.seed, cfg.fmt, cfg.out = ns.seed, ns.fmt, ns.out
    elif ns.command == "represent":
        if not is_prime(ns.p) or ns.p < 3:
            raise _ArgError(f"--p {ns.p} is not an odd prime")
        cfg.represent = (ns.c1, ns.c2, ns.mult, ns.p)
    return cfg


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_list() -> int:
    rows = [(sid, s.kind, f"p^{s.mod_exp}", s.summary, s.anchor)
            for sid, s in sorted(REGISTRY.items())]
    widths = [max(len(r[i]) for r in rows + [("id", "kind", "modulus", "hypothesis", "anchor")])
              for i in range(5)]
    header = ("id", "kind", "modulus", "hypothesis", "anchor")
    line = "  ".join(h.ljust(w) for h, w in zip(header, widths))
    print(line)
    print("-" * len(line))
    for r in rows:
        print("  ".join(str(v).ljust(w) for v, w in zip(r, widths)))
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    t0 = time.monotonic()
    report = verify_range(cfg.ids, cfg.prime_lo, cfg.prime_hi, seed=cfg.seed,
                          jobs=cfg.jobs, coeffwise_max_p=cfg.coeffwise_max_p,
                          config={"command": "verify", "format": cfg.fmt})
    _emit(report.render(cfg.fmt), cfg.out)
    t = report.totals()
    print(f"verify: {t['PASS']} PASS, {t['FAIL']} FAIL, {t['SKIP']} SKIP "
          f"in {time.monotonic() - t0:.2f}s", file=sys.stderr)
    return report.exit_code()


def _cmd_oracle(cfg: RunConfig) -> int:
    t0 = time.monotonic()
    ids = cfg.ids if cfg.ids is not None else all_ids()
    for sid in ids:
        get_statement(sid)
    outcomes = []
    for p in odd_primes(3, cfg.oracle_max_p):
        for sid in ids:
            outcomes.append(cross_check(sid, p, seed=cfg.seed, max_p=cfg.oracle_max_p))
    report = Report(outcomes, config={"command": "oracle-check",
                                      "pmax": cfg.oracle_max_p, "seed": cfg.seed,
                                      "ids": ids})
    _emit(report.render(cfg.fmt), cfg.out)
    bad = report.failures()
    print(f"oracle-check: {len(outcomes)} checks, {len(bad)} divergences "
          f"in {time.monotonic() - t0:.2f}s", file=sys.stderr)
    return 1 if bad else 0


def _cmd_represent(cfg: RunConfig) -> int:
    c1, c2, mult, p = cfg.represent
    rep = find_rep(FormSpec(c1, c2, mult), p)
    if rep is None:
        print(f"{mult}*{p} = {c1}*x^2 + {c2}*y^2 has no representation")
        return 0
    print(f"{mult}*{p} = {c1}*{rep.x}^2 + {c2}*{rep.y}^2")
    print(f"raw: (x, y) = ({rep.x}, {rep.y})")
    print(f"sign orbit: {sign_variants(rep)}")
    return 0


def run(cfg: RunConfig) -> int:
    try:
        if cfg.command == "list":
            return _cmd_list()
        if cfg.command == "verify":
            return _cmd_verify(cfg)
        if cfg.command == "oracle-check":
            return _cmd_oracle(cfg)
        if cfg.command == "represent":
            return _cmd_represent(cfg)
        raise _ArgError(f"unknown command {cfg.command!r}")
    except (UnknownStatement, CongruenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
    except _ArgError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
