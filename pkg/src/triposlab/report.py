"""Law reports and check budgets.

A report is a flat list of entries, one per law, in a canonical order; a
failing entry always carries a witness that replays to a violation through
the public operations. Serialization is JSON with stable key order so that
identical runs produce identical bytes.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Coverage:
    kind: str                 # "exhaustive" | "sampled"
    count: int | None = None
    seed: int | None = None

    def to_json(self):
        if self.kind == "sampled":
            return {"kind": "sampled", "count": self.count, "seed": self.seed}
        return {"kind": self.kind}


EXHAUSTIVE = Coverage("exhaustive")


def sampled(count: int, seed: int) -> Coverage:
    return Coverage("sampled", count, seed)


@dataclass(frozen=True)
class LawEntry:
    law_id: str
    status: str               # "pass" | "fail" | "skipped"
    witness: dict | None = None
    coverage: Coverage = EXHAUSTIVE

    def to_json(self):
        return {"law_id": self.law_id, "status": self.status,
                "witness": self.witness, "coverage": self.coverage.to_json()}


@dataclass(frozen=True)
class LawReport:
    entries: tuple[LawEntry, ...] = field(default_factory=tuple)

    @property
    def overall_pass(self) -> bool:
        return all(e.status != "fail" for e in self.entries)

    def failures(self) -> list[LawEntry]:
        return [e for e in self.entries if e.status == "fail"]

    def entry(self, law_id: str) -> LawEntry:
        for e in self.entries:
            if e.law_id == law_id:
                return e
        raise KeyError(law_id)

    def __add__(self, other: "LawReport") -> "LawReport":
        return LawReport(self.entries + other.entries)

    def to_json(self):
        return {"overall": "pass" if self.overall_pass else "fail",
                "entries": [e.to_json() for e in self.entries]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


@dataclass(frozen=True)
class CheckBudget:
    """Exhaustive up to max_ctx; seeded random trials one size beyond."""

    max_ctx: int = 2
    samples: int = 200
    seed: int = 0

    def __post_init__(self):
        if self.max_ctx < 0:
            raise ValueError("max_ctx must be nonnegative")


def run_check(law_id: str, budget: CheckBudget, find_exhaustive,
              sample_trial=None) -> LawEntry:
    """Evaluate one law: the exhaustive scan returns a witness or None; when
    it passes and the budget asks for samples, seeded random trials run one
    size beyond and the entry's coverage records that."""
    w = find_exhaustive()
    if w is not None:
        return LawEntry(law_id, "fail", w, EXHAUSTIVE)
    if budget.samples > 0 and sample_trial is not None:
        rng = random.Random(f"{budget.seed}:{law_id}")
        cov = sampled(budget.samples, budget.seed)
        for _ in range(budget.samples):
            w = sample_trial(rng)
            if w is not None:
                return LawEntry(law_id, "fail", w, cov)
        return LawEntry(law_id, "pass", None, cov)
    return LawEntry(law_id, "pass", None, EXHAUSTIVE)
