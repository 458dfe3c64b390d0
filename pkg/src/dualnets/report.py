"""Structured results for verification runs.

A report is an ordered list of named checks, each pass/fail/skipped or
timeout, plus an overall verdict.  Serialization is stable: checks appear
in the order they were declared, so two runs over identical inputs
produce byte-identical JSON.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
TIMEOUT = "timeout"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""
    elapsed_ms: int = 0

    def to_dict(self):
        return {
            "name": self.name,
            "status": self.status,
            "detail": self.detail,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class VerificationReport:
    """Accumulates checks for one verification task.

    ``timeout_policy`` decides what a timed-out check does to the overall
    verdict: 'strict' fails the report, 'quorum' leaves the verdict to
    the remaining checks (used when several primes each count as
    independent witnesses)."""

    task: str
    timeout_policy: str = "strict"
    checks: list = field(default_factory=list)

    def add(self, name, status, detail="", elapsed_ms=0):
        self.checks.append(CheckResult(name, status, detail, int(elapsed_ms)))
        return self.checks[-1]

    def run(self, name, fn, detail_of=None):
        """Execute fn and record the outcome under ``name``.

        fn returns the detail string (or None); raising marks the check
        failed, BudgetExceededError marks it timed out.  The check's
        verdict comes back so callers can branch on it."""
        from .elim import BudgetExceededError

        t0 = time.monotonic()
        try:
            detail = fn()
        except BudgetExceededError as exc:
            ms = (time.monotonic() - t0) * 1000
            return self.add(name, TIMEOUT, str(exc), ms)
        except AssertionError as exc:
            ms = (time.monotonic() - t0) * 1000
            return self.add(name, FAIL, str(exc) or "assertion failed", ms)
        except Exception as exc:
            ms = (time.monotonic() - t0) * 1000
            return self.add(name, FAIL, f"{type(exc).__name__}: {exc}", ms)
        ms = (time.monotonic() - t0) * 1000
        if detail_of is not None:
            detail = detail_of(detail)
        return self.add(name, PASS, detail if isinstance(detail, str) else "", ms)

    def skip(self, name, why=""):
        return self.add(name, SKIPPED, why)

    @property
    def overall(self):
        # pass iff every non-skipped check passes; an empty report is a bug
        if not self.checks:
            return FAIL
        statuses = [c.status for c in self.checks]
        if FAIL in statuses:
            return FAIL
        if TIMEOUT in statuses and self.timeout_policy == "strict":
            return FAIL
        return PASS

    @property
    def passed(self):
        return self.overall == PASS

    def to_dict(self):
        return {
            "task": self.task,
            "checks": [c.to_dict() for c in self.checks],
            "overall": self.overall,
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self):
        lines = [f"== {self.task} =="]
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            mark = {PASS: "ok", FAIL: "FAIL", SKIPPED: "skip", TIMEOUT: "TIMEOUT"}[c.status]
            line = f"  {c.name.ljust(width)}  {mark:7}"
            if c.elapsed_ms:
                line += f" {c.elapsed_ms:>8} ms"
            if c.detail:
                line += f"  {c.detail}"
            lines.append(line)
        lines.append(f"overall: {self.overall}")
        return "\n".join(lines)


def merge_reports(task, reports):
    """Single report whose checks are the concatenation, names prefixed."""
    merged = VerificationReport(task=task)
    policy = "strict"
    for r in reports:
        if r.timeout_policy == "quorum":
            policy = "quorum"
        for c in r.checks:
            merged.checks.append(
                CheckResult(f"{r.task}.{c.name}", c.status, c.detail, c.elapsed_ms)
            )
    merged.timeout_policy = policy
    return merged
