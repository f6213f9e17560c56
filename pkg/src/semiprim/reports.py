"""Verdict reporting: one typed result per check, JSON in a canonical form.

Canonical JSON is byte-reproducible: keys sorted, compact separators and
no timing data.  Timings are available separately (``with_timings=True``)
for humans; they are never part of the canonical bytes because wall-clock
noise would break the determinism guarantee.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIP = "skip"
VACUOUS = "vacuous"

_STATUSES = (PASS, FAIL, SKIP, VACUOUS)


@dataclass
class CheckResult:
    check_id: str
    target: str
    status: str
    witness: dict | None = None
    millis: float = 0.0

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def ok(self) -> bool:
        return self.status != FAIL

    def to_obj(self, with_timings: bool = False) -> dict:
        obj: dict = {
            "check_id": self.check_id,
            "target": self.target,
            "status": self.status,
        }
        if self.witness is not None:
            obj["witness"] = self.witness
        if with_timings:
            obj["millis"] = round(self.millis, 3)
        return obj


@dataclass
class VerdictReport:
    version: str
    results: list[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> None:
        self.results.append(result)

    def extend(self, results: list[CheckResult]) -> None:
        self.results.extend(results)

    def summary(self) -> dict:
        counts = {s: 0 for s in _STATUSES}
        for r in self.results:
            counts[r.status] += 1
        counts["total"] = len(self.results)
        return counts

    def exit_code(self) -> int:
        return 1 if any(r.status == FAIL for r in self.results) else 0

    def to_obj(self, with_timings: bool = False) -> dict:
        return {
            "version": self.version,
            "results": [r.to_obj(with_timings) for r in self.results],
            "summary": self.summary(),
        }

    def to_json(self, with_timings: bool = False) -> str:
        return json.dumps(self.to_obj(with_timings), sort_keys=True, separators=(",", ":"))


def group_witness(group) -> dict:
    """Serialisable snapshot of a subgroup: order plus generator images."""
    return {
        "order": group.order(),
        "degree": group.degree,
        "generators": [[int(v) for v in g.images] for g in group.generators],
    }
