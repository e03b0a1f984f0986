"""Machine-readable verification reports."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

STATUSES = ("pass", "fail", "skip", "xfail", "xpass")


@dataclass
class Check:
    name: str
    status: str
    witness: Any = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = to_jsonable(self.witness)
        return out


@dataclass
class VerificationReport:
    """A suite passes when no check failed and no expected failure unexpectedly passed.

    ``xfail`` marks a printed claim that is known not to hold as stated; the
    corrected statement is checked separately under its own name.
    """
    suite: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    def check(self, name: str, ok: bool, witness: Any = None) -> None:
        self.checks.append(Check(name, "pass" if ok else "fail", witness))

    def expect_false(self, name: str, ok: bool, witness: Any = None) -> None:
        """Record a printed claim that should not hold as stated."""
        self.checks.append(Check(name, "xpass" if ok else "xfail", witness))

    def skip(self, name: str, reason: str) -> None:
        self.checks.append(Check(name, "skip", reason))

    @property
    def passed(self) -> bool:
        return all(c.status in ("pass", "skip", "xfail") for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "seconds": round(self.seconds, 3),
                "checks": [c.to_json() for c in self.checks]}

    def render(self) -> str:
        lines = [f"[{'PASS' if self.passed else 'FAIL'}] {self.suite} ({self.seconds:.1f}s)"]
        for c in self.checks:
            w = "" if c.witness is None else f"  {json.dumps(to_jsonable(c.witness), sort_keys=True)}"
            if len(w) > 160:
                w = w[:157] + "..."
            lines.append(f"  {c.status:5} {c.name}{w}")
        return "\n".join(lines)


class timed:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.seconds = time.perf_counter() - self.start
        return False


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_jsonable(x: Any) -> Any:
    from .poly import Polynomial

    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return frac_str(x)
    if isinstance(x, float):
        return x
    if isinstance(x, Polynomial):
        return str(x)
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    return str(x)
