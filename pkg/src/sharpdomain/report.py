"""Check reports: a verdict, its witness, and sweep statistics.

Reports serialise to one JSON object (``schema`` 1) and back without loss.
A sweep only ever claims that a property holds on its enumerated budget;
the domain-level prediction is carried in a separate field.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

__all__ = ["CheckReport", "Stats", "HOLDS", "FAILS", "SCHEMA_VERSION", "render_text"]

HOLDS = "holds"
FAILS = "fails"
SCHEMA_VERSION = 1


@dataclass
class Stats:
    pairs_checked: int = 0
    failures: List[List[str]] = field(default_factory=list)
    runtime_ms: float = 0.0


@dataclass
class CheckReport:
    domain: str
    check: str
    inputs: List[str]
    verdict: str
    witness: Optional[Dict[str, Any]] = None
    stats: Stats = field(default_factory=Stats)
    budget: Optional[str] = None
    prediction: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in (HOLDS, FAILS):
            raise ValueError(f"verdict must be {HOLDS!r} or {FAILS!r}")
        if self.verdict == FAILS and not self.witness:
            raise ValueError("a failing report needs a witness")
        if isinstance(self.stats, dict):
            self.stats = Stats(**self.stats)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    @property
    def scope(self) -> str:
        if self.budget is None:
            return self.verdict
        return f"{self.verdict} on budget {self.budget}"

    def to_dict(self) -> Dict[str, Any]:
        out = {"schema": SCHEMA_VERSION}
        out.update(asdict(self))
        out["scope"] = self.scope
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, **kwargs)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckReport":
        data = dict(data)
        schema = data.pop("schema", SCHEMA_VERSION)
        if schema != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {schema}")
        data.pop("scope", None)
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "CheckReport":
        return cls.from_dict(json.loads(text))


def render_text(report: CheckReport) -> str:
    lines = [f"{report.check} on {report.domain}"]
    if report.inputs:
        lines.append("  inputs: " + ", ".join(report.inputs))
    lines.append(f"  verdict: {report.scope}")
    if report.prediction is not None:
        label = "sharp" if report.prediction.get("sharp") else "not sharp"
        lines.append(f"  prediction (theory, not checked here): {label}; {report.prediction.get('reason', '')}")
    if report.witness:
        lines.append("  witness:")
        for k, v in report.witness.items():
            lines.append(f"    {k} = {v}")
    s = report.stats
    lines.append(f"  checked: {s.pairs_checked}, failures: {len(s.failures)}, runtime: {s.runtime_ms:.1f} ms")
    for k, v in report.details.items():
        if isinstance(v, (list, dict)) and len(v) > 8:
            v = f"<{len(v)} entries>"
        lines.append(f"  {k}: {v}")
    return "\n".join(lines)
