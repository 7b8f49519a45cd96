"""Verification reports and exact JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def rational_str(q) -> str:
    """Exact "p/q" rendering; integers keep a "/1" denominator."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def render_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


@dataclass
class Report:
    check_id: str
    type: str
    parameters: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)
    passed: bool = True
    notes: list = field(default_factory=list)
    details: list = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "check-id": self.check_id,
            "type": self.type,
            "parameters": self.parameters,
            "counts": self.counts,
            "mismatches": self.mismatches,
            "pass": self.passed,
        }
        if self.details:
            out["details"] = self.details
        return out

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        counts = ", ".join(f"{k}={v}" for k, v in self.counts.items())
        lines = [f"[{status}] {self.check_id} {self.type}" + (f" ({params})" if params else "")]
        if counts:
            lines.append(f"  {counts}")
        for m in self.mismatches[:10]:
            lines.append(f"  mismatch: {m}")
        lines += [f"  {n}" for n in self.notes]
        return "\n".join(lines)
