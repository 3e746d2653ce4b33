"""Verification outcomes and deterministic report rendering (json/csv/text).

Reports never contain volatile fields (timing goes to stderr), so a fixed
(config, seed) pair renders byte-identical output regardless of worker count.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field


@dataclass
class VerificationOutcome:
    id: str
    kind: str
    p: int
    status: str  # PASS | FAIL | SKIP
    modulus: int
    lhs: int | None = None
    rhs: int | None = None
    witness: dict = field(default_factory=dict)
    skip_reason: str | None = None

    def record(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "p": self.p,
            "status": self.status,
            "modulus": str(self.modulus),
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "witness": self.witness,
            "skip_reason": self.skip_reason,
        }


@dataclass
class Report:
    outcomes: list[VerificationOutcome]
    config: dict = field(default_factory=dict)

    def __post_init__(self):
        self.outcomes.sort(key=lambda o: (o.id, o.p))

    def counts(self) -> dict:
        per: dict[str, dict[str, int]] = {}
        for o in self.outcomes:
            row = per.setdefault(o.id, {"PASS": 0, "FAIL": 0, "SKIP": 0})
            row[o.status] += 1
        return per

    def totals(self) -> dict:
        tot = {"PASS": 0, "FAIL": 0, "SKIP": 0}
        for o in self.outcomes:
            tot[o.status] += 1
        return tot

    def failures(self, kinds: tuple[str, ...] | None = None) -> list[VerificationOutcome]:
        out = [o for o in self.outcomes if o.status == "FAIL"]
        if kinds is not None:
            out = [o for o in out if o.kind in kinds]
        return out

    def exit_code(self) -> int:
        theorem_kinds = ("theorem", "corollary", "lemma", "identity")
        if self.failures(theorem_kinds):
            return 1
        if self.failures(("conjecture",)):
            return 2
        return 0

    # -- renderers -----------------------------------------------------------

    def to_json(self) -> str:
        doc = {
            "config": self.config,
            "outcomes": [o.record() for o in self.outcomes],
            "summary": {"per_statement": self.counts(), "totals": self.totals()},
        }
        return json.dumps(doc, sort_keys=True, indent=1) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "kind", "p", "status", "modulus", "lhs", "rhs",
                    "witness", "skip_reason"])
        for o in self.outcomes:
            r = o.record()
            w.writerow([r["id"], r["kind"], r["p"], r["status"], r["modulus"],
                        r["lhs"] or "", r["rhs"] or "",
                        json.dumps(r["witness"], sort_keys=True),
                        r["skip_reason"] or ""])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for o in self.outcomes:
            if o.status == "SKIP":
                lines.append(f"{o.id:8s} p={o.p:<6d} SKIP  ({o.skip_reason})")
            else:
                extra = ""
                if o.status == "FAIL":
                    extra = (f"  lhs={o.lhs} rhs={o.rhs} "
                             f"witness={json.dumps(o.witness, sort_keys=True)}")
                lines.append(f"{o.id:8s} p={o.p:<6d} {o.status}  mod {o.modulus}{extra}")
        lines.append("")
        for sid, row in sorted(self.counts().items()):
            lines.append(f"summary {sid:8s} PASS={row['PASS']} FAIL={row['FAIL']} "
                         f"SKIP={row['SKIP']}")
        t = self.totals()
        lines.append(f"summary TOTAL    PASS={t['PASS']} FAIL={t['FAIL']} SKIP={t['SKIP']}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")
