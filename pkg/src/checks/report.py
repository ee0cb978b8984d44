"""
Harness report: JSON document, per-check summary and a text table.
"""

import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List

import numpy as np
import pandas as pd

from src.checks.catalog import SkippedEntry
from src.checks.registry import STATUSES, CheckResult

logger = logging.getLogger(__name__)


def json_default(value: Any) -> Any:
    """Serialise numpy scalars and arrays, frozensets and anything else as text."""
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    return str(value)


@dataclass
class Report:
    timestamp: str
    results: List[CheckResult]
    skipped: List[SkippedEntry] = field(default_factory=list)

    @property
    def fails(self) -> List[CheckResult]:
        return [r for r in self.results if r.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.fails

    def frame(self) -> pd.DataFrame:
        rows = [{"subject": r.subject["name"], "kind": r.subject["kind"], "check_id": r.check_id,
                 "status": r.status, "hypothesis": r.hypothesis or "", "timing_ms": r.timing_ms}
                for r in self.results]
        return pd.DataFrame(rows, columns=["subject", "kind", "check_id", "status", "hypothesis", "timing_ms"])

    def status_counts(self) -> Dict[str, int]:
        counts = self.frame()["status"].value_counts()
        return {s: int(counts.get(s, 0)) for s in STATUSES}

    def summary(self) -> Dict[str, Dict[str, int]]:
        """Status counts per check, so degenerate coverage is visible."""
        df = self.frame()
        if df.empty:
            return {}
        table = pd.crosstab(df["check_id"], df["status"]).reindex(columns=list(STATUSES), fill_value=0)
        return {check_id: {s: int(n) for s, n in row.items()} for check_id, row in table.iterrows()}

    def body(self) -> Dict[str, Any]:
        return {
            "results": [r.to_dict() for r in self.results],
            "skipped": [s.to_dict() for s in self.skipped],
            "summary": self.summary(),
            "totals": self.status_counts(),
        }

    def digest(self) -> str:
        """SHA-256 of the canonical report without timestamp and timings."""
        body = self.body()
        for record in body["results"]:
            record.pop("timing_ms", None)
        canonical = json.dumps(body, sort_keys=True, separators=(",", ":"), default=json_default)
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def to_dict(self) -> Dict[str, Any]:
        return {"timestamp": self.timestamp, **self.body(), "digest": self.digest()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False, default=json_default)

    def to_text(self) -> str:
        df = self.frame()
        lines = []
        if not df.empty:
            table = pd.crosstab(df["check_id"], df["status"]).reindex(columns=list(STATUSES), fill_value=0)
            lines.append(table.to_string())
            lines.append("")
        for r in self.fails:
            lines.append(f"FAIL {r.check_id} on {r.subject['name']}: "
                         f"{json.dumps(r.witness, default=json_default)}")
        for s in self.skipped:
            lines.append(f"SKIPPED {s.name}: {s.error_type}: {s.error}")
        totals = self.status_counts()
        lines.append(", ".join(f"{status}: {n}" for status, n in totals.items()))
        return "\n".join(lines) + "\n"

    def save(self, file_name: str):
        path = Path(file_name)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.to_json())
        logger.info(f"Report saved to {path}")
