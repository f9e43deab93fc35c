"""Machine-readable verification reports.

The canonical JSON schema is
    {schema_version, check, params{...}, verdict, counts{...},
     families[], witnesses[[int]], wall_ms, meta{...}}
with verdicts PASS / FAIL / SKIPPED / OUTSIDE-PROVED-RANGE.  FAIL
reports carry re-checkable witnesses.  Identical configs produce
byte-identical JSON apart from the timing field and the meta block;
canonical_bytes() strips those for comparisons.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

SCHEMA_VERSION = 1

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"
OUTSIDE = "OUTSIDE-PROVED-RANGE"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


@dataclass
class VerificationReport:
    check: str
    params: dict = field(default_factory=dict)
    verdict: str = PASS
    counts: dict = field(default_factory=dict)
    families: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    wall_ms: int = 0
    meta: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["schema_version"] = SCHEMA_VERSION
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        d = dict(d)
        d.pop("schema_version", None)
        return cls(**d)


def emit(report: VerificationReport, fmt: str = "json") -> bytes:
    return emit_many([report], fmt)


def parse_json(data: bytes) -> list[VerificationReport]:
    loaded = json.loads(data.decode())
    if isinstance(loaded, dict):
        loaded = [loaded]
    return [VerificationReport.from_dict(d) for d in loaded]


def canonical_bytes(report: VerificationReport) -> bytes:
    """Deterministic serialization: timing and meta excluded."""
    d = report.to_dict()
    d.pop("wall_ms", None)
    d.pop("meta", None)
    return json.dumps(d, sort_keys=True, separators=(",", ":")).encode()


def _csv_rows(reports):
    for r in reports:
        yield {
            "check": r.check,
            "params": json.dumps(r.params, sort_keys=True),
            "verdict": r.verdict,
            "counts": json.dumps(r.counts, sort_keys=True),
            "families": ";".join(str(f) for f in r.families),
            "witnesses": json.dumps(r.witnesses),
            "wall_ms": r.wall_ms,
        }


def _text_block(r: VerificationReport) -> str:
    lines = [f"[{r.verdict}] {r.check}  ({r.wall_ms} ms)"]
    if r.params:
        lines.append(f"  params: {json.dumps(r.params, sort_keys=True)}")
    if r.counts:
        lines.append(f"  counts: {json.dumps(r.counts, sort_keys=True)}")
    if r.families:
        lines.append(f"  families: {r.families}")
    if r.witnesses:
        shown = r.witnesses[:4]
        more = f" (+{len(r.witnesses) - 4} more)" if len(r.witnesses) > 4 else ""
        lines.append(f"  witnesses: {shown}{more}")
    return "\n".join(lines)


def emit_many(reports: list[VerificationReport], fmt: str = "json") -> bytes:
    if fmt == "json":
        payload = [r.to_dict() for r in reports]
        body = payload[0] if len(payload) == 1 else payload
        return (json.dumps(body, sort_keys=True, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        fieldnames = ["check", "params", "verdict", "counts", "families", "witnesses", "wall_ms"]
        writer = csv.DictWriter(buf, fieldnames=fieldnames)
        writer.writeheader()
        for row in _csv_rows(reports):
            writer.writerow(row)
        return buf.getvalue().encode()
    if fmt == "text":
        return ("\n".join(_text_block(r) for r in reports) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")


def aggregate_exit_code(reports: list[VerificationReport]) -> int:
    return EXIT_FAIL if any(r.verdict == FAIL for r in reports) else EXIT_OK
