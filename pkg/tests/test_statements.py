"""Statement registry behavior: outcomes, branches, determinism."""

from fractions import Fraction as F

import pytest

from supercong import UnknownStatement, delta_p
from supercong.statements import (REGISTRY, THEOREM_KINDS, all_ids, applicability,
                                  get_statement, make_context, verify_one,
                                  verify_range)
from supercong.statements.base import CheckPoint, Statement, always

KNOWN_CONJECTURE_FINDINGS = {
    ("CJ4.16", 3), ("CJ4.19", 3), ("CJ4.2", 5), ("CJ4.22", 5),
    ("CJ4.13", 7), ("CJ4.18", 7),
}


def test_registry_self_description():
    assert len(REGISTRY) == 82
    for sid, stmt in REGISTRY.items():
        assert stmt.id == sid
        assert stmt.kind in ("theorem", "corollary", "lemma", "identity", "conjecture")
        assert stmt.mod_exp in (1, 2, 3)
        assert stmt.summary and stmt.anchor


def test_unknown_statement():
    with pytest.raises(UnknownStatement):
        get_statement("T9.9")
    with pytest.raises(UnknownStatement):
        verify_one("nope", 5)


def test_applicability_examples():
    assert applicability("T3.4", 7) is None
    assert "mod 3" in applicability("E2.4", 7)
    assert "p > 3" in applicability("E1.4", 3)


def test_delta_p_examples():
    assert delta_p(F(1, 2), 5) == 0
    assert delta_p(F(5), 5) == F(5)
    assert delta_p(F(10, 3), 5) == F(10, 3)  # 10/3 === 0 mod 5
    assert delta_p(F(-1), 7) == 0
    assert delta_p(F(6), 7) == -7


def test_every_theorem_kind_passes_small_primes():
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        ctx = make_context(p)
        for sid in all_ids():
            stmt = get_statement(sid)
            out = verify_one(sid, p, ctx=ctx)
            if stmt.kind in THEOREM_KINDS:
                assert out.status != "FAIL", (sid, p, out.witness, out.lhs, out.rhs)
            elif out.status == "FAIL":
                assert (sid, p) in KNOWN_CONJECTURE_FINDINGS, (sid, p, out.witness)


def test_t21_covers_all_three_branches():
    # grid includes residues <a> = 0 and p-1 with nonzero t
    ctx = make_context(7)
    stmt = get_statement("T2.1")
    cases = {pt.witness["case"] for pt in stmt.check(ctx)}
    assert 0 in cases and 6 in cases and 3 in cases


def test_t41_exercises_both_comparisons():
    ctx = make_context(11)
    out = verify_one("T4.1", 11, ctx=ctx)
    assert out.status == "PASS"
    # <a> > <b> needs b below a somewhere in the grid: b=0, a=1 qualifies
    stmt = get_statement("T4.1")
    pts = list(stmt.check(ctx))
    assert any(ctx.least(F(p_.witness["a"])) > ctx.least(F(p_.witness["b"]))
               for p_ in pts)


def test_c22_representative_witness():
    out = verify_one("C2.2", 5)
    assert out.status == "PASS"
    assert out.witness["a"] == "-1/2"
    assert out.lhs == 1 and out.rhs == 1 and out.modulus == 25


def test_t34_witness():
    out = verify_one("T3.4", 7)
    assert out.status == "PASS"
    assert out.witness["A"] == -2
    assert out.lhs == out.rhs == 10


def test_conjecture_sign_search_records_match():
    out = verify_one("CJ4.1", 13)
    assert out.status == "PASS"
    first = next(get_statement("CJ4.1").check(make_context(13)))
    assert first.witness["matched"] is not None


def test_known_conjecture_findings_fail_with_witness():
    for sid, p in sorted(KNOWN_CONJECTURE_FINDINGS):
        out = verify_one(sid, p)
        assert out.status == "FAIL"
        assert out.witness
        assert out.lhs is not None


def test_verify_range_e13_count():
    report = verify_range(["E1.3"], 3, 100)
    assert report.totals() == {"PASS": 24, "FAIL": 0, "SKIP": 0}


def test_verify_range_deterministic_across_jobs():
    r1 = verify_range(None, 3, 20, seed=42, jobs=1)
    r2 = verify_range(None, 3, 20, seed=42, jobs=3)
    assert r1.to_json() == r2.to_json()
    assert r1.to_csv() == r2.to_csv()


def test_verify_range_seed_changes_grids_not_status():
    r1 = verify_range(["T4.1"], 37, 47, seed=1)
    r2 = verify_range(["T4.1"], 37, 47, seed=2)
    assert all(o.status == "PASS" for o in r1.outcomes + r2.outcomes)


def test_exit_codes_with_injected_failures():
    def bad_check(ctx):
        yield CheckPoint(False, {"forced": True}, 1, 0, ctx.p)

    for kind, expected in (("theorem", 1), ("conjecture", 2)):
        sid = f"ZZTEST-{kind}"
        REGISTRY[sid] = Statement(sid, kind, 1, "always fails (test dummy)",
                                  "synthetic", always, bad_check)
        try:
            report = verify_range([sid, "E1.3"], 5, 11)
            assert report.exit_code() == expected
            fails = report.failures()
            assert all(o.id == sid for o in fails)
        finally:
            del REGISTRY[sid]
    assert verify_range(["E1.3"], 5, 11).exit_code() == 0


def test_skip_never_silent_on_arithmetic_error():
    def exploding_check(ctx):
        from supercong.errors import NotInvertible

        raise NotInvertible("synthetic failure")
        yield  # pragma: no cover

    sid = "ZZTEST-explode"
    REGISTRY[sid] = Statement(sid, "theorem", 1, "raises (test dummy)",
                              "synthetic", always, exploding_check)
    try:
        out = verify_one(sid, 5)
        assert out.status == "SKIP"
        assert "NotInvertible" in out.skip_reason
    finally:
        del REGISTRY[sid]


def test_report_renders_all_formats():
    report = verify_range(["E1.3", "T3.4"], 3, 30)
    js = report.to_json()
    assert '"T3.4"' in js
    cs = report.to_csv()
    assert cs.splitlines()[0].startswith("id,kind,p,status")
    tx = report.to_text()
    assert "summary TOTAL" in tx
    with pytest.raises(ValueError):
        report.render("xml")


def test_outcome_ordering():
    report = verify_range(["T3.4", "E1.3"], 3, 30)
    keys = [(o.id, o.p) for o in report.outcomes]
    assert keys == sorted(keys)


def test_large_prime_stratified_paths():
    # p > 199 switches T2.2/C2.1/T2.3 to the pointwise-all-x screen on a
    # stratified a-grid; p > 31 switches the b/m grids to seeded samples
    ctx = make_context(211, seed=5)
    for sid in ("T2.2", "C2.1", "T2.3", "L4.3", "T4.1"):
        out = verify_one(sid, 211, ctx=ctx)
        assert out.status == "PASS", (sid, out.witness)
    stmt = get_statement("T2.2")
    modes = {pt.witness.get("mode") for pt in stmt.check(ctx)}
    assert "pointwise-all-x" in modes


def test_coeffwise_threshold_config():
    # lowering the threshold forces the screen path at a small prime
    ctx = make_context(31, coeffwise_max_p=20)
    stmt = get_statement("T2.2")
    modes = {pt.witness.get("mode") for pt in stmt.check(ctx)}
    assert "pointwise-all-x" in modes and "coefficientwise" not in modes
    assert verify_one("T2.2", 31, ctx=ctx).status == "PASS"
