"""Vacuity guard: tampering any kernel op must flip dependent statements to FAIL.

Each mutation targets a slot a correct check actually reads (index 0 can be a
dead or parity-unchecked slot), so a passing run here means every registered
comparison is live.
"""

import numpy as np

from supercong.fastkernel import ModKernel
from supercong.statements import make_context, verify_one

P = 13


def _with_mutation(op, mutate, targets):
    orig = getattr(ModKernel, op)

    def tampered(self, *a, **kw):
        return mutate(self, orig(self, *a, **kw))

    setattr(ModKernel, op, tampered)
    try:
        ctx = make_context(P)
        return {sid: verify_one(sid, P, ctx=ctx).status for sid in targets}
    finally:
        setattr(ModKernel, op, orig)


def _bump_list_tail(self, res):
    if isinstance(res, list) and res and isinstance(res[-1], int):
        return res[:-1] + [res[-1] + 1]
    return res


def test_trunc_sum_tampering_detected():
    targets = ["E1.3", "T2.1", "L2.2", "L2.3", "C2.2", "C3.1", "T3.1", "T3.2",
               "T3.4", "T4.1", "C4.1", "T4.2", "T5.1", "T5.3", "T5.4", "R5.1",
               "CJ4.1", "CJ5.1"]
    statuses = _with_mutation("trunc_sum_batch", _bump_list_tail, targets)
    bad = [sid for sid, s in statuses.items() if s == "PASS"]
    assert not bad, f"statements blind to trunc_sum tampering: {bad}"


def test_other_ops_tampering_detected():
    def bump_first(self, res):
        if isinstance(res, list) and res and isinstance(res[0], int):
            return [res[0] + 1] + res[1:]
        if isinstance(res, int):
            return res + 1
        return res

    def bump_coeff1(self, res):
        if isinstance(res, np.ndarray):
            out = res.copy()
            out[:, 1] = out[:, 1] + 1
            return out
        return res

    def bump_row1(self, res):
        return [res[0], res[1] + 1] + res[2:]

    cases = [
        ("recip_sum_batch", bump_first, ["T2.3", "I2.4"]),
        ("central_sum_batch", bump_first, ["T2.5", "E2.7"]),
        ("choose_sum_batch", bump_first, ["C2.4"]),
        ("choose_pow_batch", bump_first, ["T2.3"]),
        ("dot_ints_batch", bump_first, ["T2.4"]),
        ("pn_coeffs_batch", bump_coeff1, ["T2.2", "C2.1"]),
        ("binom", bump_first, ["L4.3", "C4.2", "C4.3"]),
        ("binom_shift_row", bump_row1, ["L4.2"]),
        ("harmonic_value", bump_first, ["L3.1"]),
        ("central_ratio", bump_first, ["E3.1"]),
    ]
    for op, mutate, targets in cases:
        statuses = _with_mutation(op, mutate, targets)
        bad = [sid for sid, s in statuses.items() if s == "PASS"]
        assert not bad, f"{op}: statements blind to tampering: {bad}"

    orig = ModKernel.legendre_value

    def n_dependent(self, n, x, e=1):
        return (orig(self, n, x, e) + n) % self.p

    ModKernel.legendre_value = n_dependent
    try:
        ctx = make_context(P)
        for sid in ("L5.1", "L5.2", "L5.3"):
            assert verify_one(sid, P, ctx=ctx).status == "FAIL", sid
    finally:
        ModKernel.legendre_value = orig


def test_untampered_baseline():
    ctx = make_context(P)
    for sid in ("E1.3", "T2.2", "T2.3", "L4.2", "L5.3", "T5.2"):
        assert verify_one(sid, P, ctx=ctx).status == "PASS"
