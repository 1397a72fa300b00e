"""Law reports shared by every checker and by the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class LawResult:
    law: str
    status: Status
    counterexample: str | None = None
    detail: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status is Status.PASS

    def to_json(self):
        out = {"law": self.law, "status": self.status.value,
               "counterexample": self.counterexample}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class LawReport:
    """Ordered collection of law results; the first counterexample per law."""

    subject: str
    results: list[LawResult] = field(default_factory=list)

    def add(self, law, ok, counterexample=None, **detail):
        status = ok if isinstance(ok, Status) else (Status.PASS if ok else Status.FAIL)
        self.results.append(LawResult(law, status, None if status is Status.PASS else counterexample, detail))
        return self.results[-1]

    def extend(self, other, prefix=""):
        for r in other.results:
            self.results.append(LawResult(prefix + r.law, r.status, r.counterexample, r.detail))
        return self

    def __getitem__(self, law):
        for r in self.results:
            if r.law == law:
                return r
        raise KeyError(law)

    def __contains__(self, law):
        return any(r.law == law for r in self.results)

    @property
    def ok(self):
        return all(r.status is Status.PASS for r in self.results)

    @property
    def status(self):
        if any(r.status is Status.FAIL for r in self.results):
            return Status.FAIL
        if any(r.status is Status.INCONCLUSIVE for r in self.results):
            return Status.INCONCLUSIVE
        return Status.PASS

    def failures(self):
        return [r for r in self.results if r.status is Status.FAIL]

    def to_json(self):
        return {"subject": self.subject, "status": self.status.value,
                "results": [r.to_json() for r in self.results]}

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def __str__(self):
        lines = [f"{self.subject}: {self.status.value}"]
        for r in self.results:
            line = f"  {r.status.value:<12} {r.law}"
            if r.counterexample:
                line += f"  [{r.counterexample}]"
            lines.append(line)
        return "\n".join(lines)
