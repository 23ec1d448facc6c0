"""
src/symmetra/algebra/report.py

Check records and reports shared by the ratio check and the verifier.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import pandas as pd


@dataclass
class CheckRecord:
    axiom: str
    witness: Tuple[int, ...]
    lhs: Any
    rhs: Any
    passed: bool


def _render(value: Any, scalar_field=None):
    if hasattr(value, "to_json"):
        return value.to_json()
    if scalar_field is not None:
        return scalar_field.format(value)
    return str(value)


@dataclass
class Report:
    """Overall pass iff every record passes. Failing records keep both sides."""
    subject: str
    checks: List[CheckRecord] = field(default_factory=list)
    scalar_field: Any = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, axiom: str, witness, lhs, rhs) -> CheckRecord:
        record = CheckRecord(axiom, tuple(witness), lhs, rhs, lhs == rhs)
        self.checks.append(record)
        return record

    def extend(self, other: 'Report'):
        self.checks.extend(other.checks)

    def failures(self) -> List[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    def axioms(self) -> List[str]:
        seen: List[str] = []
        for c in self.checks:
            if c.axiom not in seen:
                seen.append(c.axiom)
        return seen

    def failed_axioms(self) -> List[str]:
        return [a for a in self.axioms() if any(c.axiom == a for c in self.failures())]

    def to_frame(self) -> pd.DataFrame:
        rows = [{"axiom": c.axiom, "witness": c.witness, "passed": c.passed} for c in self.checks]
        return pd.DataFrame(rows, columns=["axiom", "witness", "passed"])

    def summary(self) -> pd.DataFrame:
        """Per-axiom totals and failures."""
        frame = self.to_frame()
        if frame.empty:
            return pd.DataFrame(columns=["checks", "failed"])
        grouped = frame.groupby("axiom", sort=False)["passed"]
        return pd.DataFrame({"checks": grouped.size(), "failed": grouped.apply(lambda s: int((~s).sum()))})

    def to_json(self, failures_only: bool = False) -> Dict[str, Any]:
        records = self.failures() if failures_only else self.checks
        summary = self.summary()
        return {
            "subject": self.subject,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures()),
            "summary": {a: {"checks": int(r["checks"]), "failed": int(r["failed"])}
                        for a, r in summary.iterrows()},
            "checks": [
                {
                    "axiom": c.axiom,
                    "witness": list(c.witness),
                    "passed": c.passed,
                    **({} if c.passed else {"lhs": _render(c.lhs, self.scalar_field),
                                            "rhs": _render(c.rhs, self.scalar_field)}),
                }
                for c in records
            ],
        }
