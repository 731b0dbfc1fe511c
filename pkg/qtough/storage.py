from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import IO, Any, Dict, Iterable, List

from .verify import VerificationReport

CSV_COLUMNS = ("check_id", "params", "margin", "passed")


def _dumps(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def canonical_order(reports: Iterable[VerificationReport]) -> List[VerificationReport]:
    """Sorted by check_id, then by the JSON text of params; stable for equal keys."""
    return sorted(reports, key=lambda r: (r.check_id, _dumps(r.to_json()["params"])))


def write_jsonl(reports: Iterable[VerificationReport], out: IO[str]) -> int:
    count = 0
    for report in canonical_order(reports):
        out.write(_dumps(report.to_json()) + "\n")
        count += 1
    return count


def write_csv(reports: Iterable[VerificationReport], out: IO[str]) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    count = 0
    for report in canonical_order(reports):
        row = report.to_json()
        writer.writerow([row["check_id"], _dumps(row["params"]), row["margin"], str(row["passed"]).lower()])
        count += 1
    return count


def save_reports(path: Path, reports: Iterable[VerificationReport], fmt: str = "json") -> int:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as f:
        return write_csv(reports, f) if fmt == "csv" else write_jsonl(reports, f)


def load_jsonl(path: Path) -> List[Dict[str, Any]]:
    if not path.exists():
        return []
    raw = path.read_text(encoding="utf-8").strip()
    if not raw:
        return []
    return [json.loads(line) for line in raw.splitlines() if line.strip()]
