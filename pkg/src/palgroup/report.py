"""Verification reports: JSON schema, delimited output, and figures."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

SCHEMA_VERSION = 1


@dataclass
class VerificationReport:
    """Counts, counterexamples, and per-case statistics from an exhaustive run.

    ``runtime_ms`` is informational and excluded from determinism comparisons.
    """

    kind: str
    parameters: dict
    totals: dict
    per_form_counts: dict
    counterexamples: list[str] = field(default_factory=list)
    runtime_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "kind": self.kind,
            "parameters": self.parameters,
            "totals": self.totals,
            "per_form_counts": self.per_form_counts,
            "counterexamples": self.counterexamples,
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=False)

    def summary_lines(self) -> list[str]:
        lines = [f"{self.kind}: {'OK' if self.ok else 'FAILED'}"]
        for key, value in self.parameters.items():
            if not isinstance(value, dict):
                lines.append(f"  {key} = {value}")
        for key, value in self.totals.items():
            lines.append(f"  {key}: {value}")
        for key, value in self.per_form_counts.items():
            lines.append(f"  [{key}] {value}")
        if self.counterexamples:
            lines.append(f"  counterexamples ({len(self.counterexamples)}):")
            for w in self.counterexamples[:50]:
                lines.append(f"    {w}")
            if len(self.counterexamples) > 50:
                lines.append(f"    ... and {len(self.counterexamples) - 50} more")
        lines.append(f"  runtime_ms: {self.runtime_ms}")
        return lines


def write_report_files(report: VerificationReport, out_dir: str | Path) -> list[Path]:
    """Write report.json, report.csv, and a per-form histogram figure."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    json_path = out / "report.json"
    json_path.write_text(report.to_json() + "\n")
    written.append(json_path)

    csv_path = out / "report.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["section", "key", "value"])
        for key, value in report.totals.items():
            writer.writerow(["totals", key, value])
        for key, value in report.per_form_counts.items():
            writer.writerow(["per_form_counts", key, value])
        for w in report.counterexamples:
            writer.writerow(["counterexamples", w, ""])
    written.append(csv_path)

    if report.per_form_counts:
        written.append(_write_histogram(report, out / "report.png"))
    return written


def _write_histogram(report: VerificationReport, path: Path) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    keys = list(report.per_form_counts)
    values = [report.per_form_counts[k] for k in keys]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.7 * len(keys) + 2.0), 3.2))
    ax.bar(range(len(keys)), values, color="#4878cf")
    ax.set_xticks(range(len(keys)))
    ax.set_xticklabels(keys, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("hits")
    ax.set_title(report.kind)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
