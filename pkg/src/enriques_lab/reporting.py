"""Check results and deterministic report rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    id: str
    anchor: str
    computed: object
    expected: object
    inputs: dict = field(default_factory=dict)
    detail: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.computed == self.expected else "fail"

    def to_dict(self):
        out = {
            "id": self.id,
            "anchor": self.anchor,
            "inputs": self.inputs,
            "computed": self.computed,
            "expected": self.expected,
            "status": self.status,
        }
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, check: Check):
        self.checks.append(check)

    def extend_plain(self, prefix: str, results, anchor: str):
        """Absorb plain result dicts (id/computed/expected) from a sub-suite."""
        for r in results:
            chk = Check(
                id=f"{prefix}/{r['id']}",
                anchor=anchor,
                computed=_plain(r["computed"]),
                expected=_plain(r["expected"]),
            )
            for key in ("certificates", "detail"):
                if key in r:
                    chk.detail[key] = _plain(r[key])
            self.checks.append(chk)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_dict(self):
        return {
            "suite": self.suite,
            "passed": self.passed,
            "counts": {
                "total": len(self.checks),
                "failed": sum(1 for c in self.checks if c.status != "pass"),
            },
            "notes": list(self.notes),
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(
                f"{c.status.upper():4s} {c.id}: computed={_short(c.computed)} "
                f"expected={_short(c.expected)}"
            )
        for n in self.notes:
            lines.append(f"NOTE {n}")
        state = "PASS" if self.passed else "FAIL"
        lines.append(f"{state} {self.suite}: {len(self.checks)} checks, "
                     f"{sum(1 for c in self.checks if c.status != 'pass')} failed")
        return "\n".join(lines)


def _plain(value):
    """JSON-safe copy (tuples to lists, Fractions to strings)."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    return str(value)


def _short(value):
    s = str(_plain(value))
    return s if len(s) <= 60 else s[:57] + "..."
