"""Acceptance suite: the nine exit criteria at their stated ranges/tolerances.

Every congruence comparison is exact residue equality (zero tolerance).  One
pass/fail line is printed per criterion; run with `pytest -s` to see them live.
"""

import json
import time

from supercong.oracle import ALL_IDENTITY_CERTIFICATIONS, cross_check
from supercong.statements import THEOREM_KINDS, all_ids, verify_range
from supercong.cli import main

ORACLE_PRIMES = (3, 5, 7, 11, 13)

# the only conjecture outcomes that do not PASS up to 500: tiny-prime
# degeneracies (an upper parameter === 0 mod p), the printed CJ4.2/CJ4.13
# chain members, and CJ5.5's extra-header p === 1 mod 8 case
EXPECTED_CONJECTURE_FINDINGS = {
    ("CJ4.2", 5), ("CJ4.13", 7), ("CJ4.16", 3), ("CJ4.18", 7),
    ("CJ4.19", 3), ("CJ4.22", 5),
    ("CJ5.5", 41), ("CJ5.5", 113), ("CJ5.5", 137), ("CJ5.5", 257),
    ("CJ5.5", 313), ("CJ5.5", 337), ("CJ5.5", 353), ("CJ5.5", 409),
    ("CJ5.5", 457),
}


def _announce(num: int, ok: bool, detail: str):
    print(f"acceptance criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def _no_fails(report, context: str):
    bad = report.failures()
    assert not bad, (context, [(o.id, o.p, o.witness) for o in bad[:3]])


def test_criterion_1_rodriguez_villegas_suite():
    t0 = time.monotonic()
    report = verify_range(["E1.3", "E1.4", "E1.5", "E1.6"], 3, 1000)
    dt = time.monotonic() - t0
    _no_fails(report, "criterion 1")
    t = report.totals()
    ok = t["FAIL"] == 0 and t["PASS"] == 4 * 167 - 2 and dt < 10.0
    _announce(1, ok, f"(1.3)-(1.6) for 3<=p<=1000: {t['PASS']} PASS, "
                     f"{t['SKIP']} SKIP (p=3 excluded by denominators), {dt:.2f}s")


def test_criterion_2_symmetry_theorem():
    report = verify_range(["T2.2"], 3, 1000, seed=42)
    _no_fails(report, "criterion 2")
    t = report.totals()
    ok = t["FAIL"] == 0 and t["SKIP"] == 0 and t["PASS"] == 167
    _announce(2, ok, f"T2.2 coefficientwise p<=199 / pointwise to 1000: {t['PASS']} PASS")


def test_criterion_3_mod_p3_statements():
    report = verify_range(["T2.1", "L4.2"], 3, 300, seed=42)
    _no_fails(report, "criterion 3")
    t = report.totals()
    ok = t["FAIL"] == 0 and t["SKIP"] == 0 and t["PASS"] == 2 * 61
    _announce(3, ok, f"T2.1 and L4.2 mod p^3 for p<=300: {t['PASS']} PASS")


def test_criterion_4_section3_suite():
    report = verify_range(["T3.1", "E3.1", "T3.2", "T3.3", "T3.4", "L3.1", "C3.1"],
                          3, 1000, seed=42)
    _no_fails(report, "criterion 4")
    t = report.totals()
    by_id = report.counts()
    ok = (t["FAIL"] == 0 and by_id["T3.2"]["PASS"] == 167
          and by_id["T3.4"]["PASS"] == 166)  # T3.4 needs p > 3
    _announce(4, ok, f"T3.1, (3.1), T3.2 (m<=12), T3.3 (11 families), T3.4 "
                     f"for p<=1000: {t['PASS']} PASS, {t['SKIP']} SKIP")


def test_criterion_5_section45_suites():
    ids = ["T4.1", "T4.2", "T4.3", "C4.1", "C4.2", "C4.3",
           "T5.1", "T5.2", "T5.3", "T5.4", "T5.5", "T5.6", "R5.1",
           "L4.1", "L4.2", "L4.3", "L5.1", "L5.2", "L5.3", "I4.2", "I4.5", "I4.6"]
    report = verify_range(ids, 3, 500, seed=42)
    _no_fails(report, "criterion 5")
    t = report.totals()
    # quadratic-form witnesses actually surfaced
    t42 = [o for o in report.outcomes if o.id == "T4.2" and o.p % 4 == 1]
    t43 = [o for o in report.outcomes if o.id == "T4.3" and o.p % 3 == 1]
    ok = (t["FAIL"] == 0 and all("x" in o.witness for o in t42)
          and all("A" in o.witness for o in t43))
    _announce(5, ok, f"section 4/5 suites for p<=500: {t['PASS']} PASS, "
                     f"{t['SKIP']} SKIP, quadratic-form witnesses present")


def test_criterion_6_oracle_certification():
    t0 = time.monotonic()
    passes = skips = 0
    diverged = []
    for p in ORACLE_PRIMES:
        for sid in all_ids():
            out = cross_check(sid, p, seed=42)
            if out.status == "PASS":
                passes += 1
            elif out.status == "SKIP":
                skips += 1
            else:
                diverged.append((sid, p))
    dt = time.monotonic() - t0
    ok = not diverged and dt < 60.0 and passes > 300
    _announce(6, ok, f"exact-rational oracle, p in {ORACLE_PRIMES}: {passes} "
                     f"statements matched on 100% of grid points, {skips} skipped, "
                     f"{dt:.1f}s (divergences: {diverged})")


def test_criterion_7_exact_identities():
    for name, certify in ALL_IDENTITY_CERTIFICATIONS.items():
        certify(count=100, seed=42)  # raises on any counterexample
    _announce(7, True, "5 closed-form identities hold on 100 seeded rational "
                       "tuples each (exact, no modulus)")


def test_criterion_8_conjecture_sweep():
    ids = [s for s in all_ids() if s.startswith("CJ")]
    report = verify_range(ids, 3, 500, seed=42)
    theorem_fails = report.failures(THEOREM_KINDS)
    findings = {(o.id, o.p) for o in report.failures(("conjecture",))}
    witnesses_ok = all(o.witness and o.lhs is not None
                       for o in report.failures(("conjecture",)))
    ok = (not theorem_fails and findings == EXPECTED_CONJECTURE_FINDINGS
          and witnesses_ok and report.exit_code() == 2)
    t = report.totals()
    _announce(8, ok, f"CJ4.1-4.23, CJ5.1-5.5 for p<=500: {t['PASS']} PASS, "
                     f"{t['SKIP']} SKIP, {len(findings)} findings reported with "
                     f"witnesses (exit code 2), zero theorem-kind FAILs")


def test_criterion_9_determinism(tmp_path):
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    code1 = main(["verify", "--ids", "all", "--primes", "3:300", "--seed", "42",
                  "--jobs", "1", "--format", "json", "--out", str(out1)])
    code2 = main(["verify", "--ids", "all", "--primes", "3:300", "--seed", "42",
                  "--jobs", "8", "--format", "json", "--out", str(out2)])
    b1, b2 = out1.read_bytes(), out2.read_bytes()
    doc = json.loads(b1)
    theorem_fails = [r for r in doc["outcomes"]
                     if r["status"] == "FAIL" and r["kind"] != "conjecture"]
    ok = b1 == b2 and code1 == code2 == 2 and not theorem_fails
    _announce(9, ok, f"full sweep 3:300 byte-identical across --jobs 1/8 "
                     f"({len(b1)} bytes, {len(doc['outcomes'])} outcomes, "
                     f"exit code {code1} from known conjecture findings)")
