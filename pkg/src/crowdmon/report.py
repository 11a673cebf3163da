"""Run reports and on-disk artifacts: timeseries CSV, alerts JSONL, summary JSON.

All serialization is deterministic (floats via repr, fixed key order, LF line
endings) so batch and paced-replay runs over the same input produce byte-
identical files.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from typing import IO, Iterable

from .emotions import EMOTIONS
from .engine import WindowRecord
from .ingest import Message
from .synth import GroundTruth
from .temporal import AnalysisConfig

#: Exact timeseries column order; the header line is part of the interface.
TIMESERIES_HEADER = (
    "window_index,window_start,window_end,n_total,n_classified,"
    "n_anger,n_fear,n_happiness,n_sadness,"
    "rate_anger,rate_fear,rate_happiness,rate_sadness,"
    "z_anger,z_fear,z_happiness,z_sadness,"
    "level_anger,level_fear,level_happiness,level_sadness,"
    "status,groups,crowd_types,danger"
)

TIMESERIES_COLUMNS = TIMESERIES_HEADER.split(",")


def _fmt(value) -> str:
    return "" if value is None else repr(value)


def timeseries_row(record: WindowRecord) -> list[str]:
    s = record.stats
    row = [
        str(s.index),
        s.start.isoformat(),
        s.end.isoformat(),
        str(s.n_total),
        str(s.n_classified),
    ]
    row.extend(str(c) for c in s.counts)
    rates = s.rates if s.rates is not None else (None,) * 4
    zscores = s.zscores if s.zscores is not None else (None,) * 4
    levels = s.levels if s.levels is not None else (None,) * 4
    row.extend(_fmt(r) for r in rates)
    row.extend(_fmt(z) for z in zscores)
    row.extend("" if level is None else level.value for level in levels)
    row.append(record.status)
    inference = record.inference
    if inference is None or not inference.groups:
        row.extend(["", ""])
    else:
        row.append("|".join(g.label for g in sorted(inference.groups, key=lambda g: g.value)))
        row.append(
            "|".join(t.label for t in sorted(inference.crowd_types, key=lambda t: t.value))
        )
    row.append("true" if inference is not None and inference.danger else "false")
    return row


class TimeseriesWriter:
    """Incremental CSV writer used by both batch analysis and paced replay."""

    def __init__(self, fh: IO[str]):
        self._fh = fh
        self._writer = csv.writer(fh, lineterminator="\n")
        self._writer.writerow(TIMESERIES_COLUMNS)

    def write(self, record: WindowRecord) -> None:
        self._writer.writerow(timeseries_row(record))

    def flush(self) -> None:
        self._fh.flush()


def alert_payload(record: WindowRecord) -> dict:
    """JSON object describing one danger window."""
    inference = record.inference
    s = record.stats
    groups = sorted(inference.groups, key=lambda g: g.value)
    trigger = sorted(
        {e for g in groups if g.dangerous for e in g.emotions}, key=lambda e: e.value
    )
    return {
        "window_index": s.index,
        "window_start": s.start.isoformat(),
        "groups": [g.label for g in groups],
        "crowd_types": [
            t.label for t in sorted(inference.crowd_types, key=lambda t: t.value)
        ],
        "trigger_emotions": [e.label for e in trigger],
        "zscores": {e.label: s.zscores[i] for i, e in enumerate(EMOTIONS)},
    }


def write_alerts(records: Iterable[WindowRecord], fh: IO[str]) -> int:
    """Write one JSONL object per danger window; returns how many."""
    count = 0
    for record in records:
        if record.inference is not None and record.inference.danger:
            fh.write(json.dumps(alert_payload(record), separators=(",", ":")) + "\n")
            count += 1
    return count


@dataclass
class RunReport:
    """Everything one analysis run produced, ready to summarize."""

    config: AnalysisConfig
    origin: str | None  # as requested on the command line; None = derived from data
    records: list[WindowRecord]
    n_messages: int
    n_skipped: int

    @property
    def alerts(self) -> list[WindowRecord]:
        return [
            r for r in self.records if r.inference is not None and r.inference.danger
        ]

    @property
    def n_classified(self) -> int:
        return sum(r.stats.n_classified for r in self.records)

    @property
    def classified_fraction(self) -> float:
        return self.n_classified / self.n_messages if self.n_messages else 0.0

    def emotion_totals(self) -> dict[str, int]:
        totals = [0, 0, 0, 0]
        for record in self.records:
            for i, c in enumerate(record.stats.counts):
                totals[i] += c
        return {e.label: totals[i] for i, e in enumerate(EMOTIONS)}

    def summary(self) -> dict:
        by_status: dict[str, int] = {}
        for record in self.records:
            by_status[record.status] = by_status.get(record.status, 0) + 1
        return {
            "config": {
                "interval_minutes": self.config.interval_minutes,
                "z_threshold": self.config.z_threshold,
                "ma_window": self.config.ma_window,
                "min_classified": self.config.min_classified,
                "std_epsilon": self.config.std_epsilon,
                "z_cap": self.config.z_cap,
                "origin": self.origin,
            },
            "messages": {
                "total": self.n_messages,
                "classified": self.n_classified,
                "unclassified": self.n_messages - self.n_classified,
                "classified_fraction": self.classified_fraction,
                "skipped_records": self.n_skipped,
                "by_emotion": self.emotion_totals(),
            },
            "windows": {"total": len(self.records), "by_status": by_status},
            "alerts": {
                "count": len(self.alerts),
                "windows": [r.stats.index for r in self.alerts],
            },
        }


def write_summary(report: RunReport, fh: IO[str]) -> None:
    json.dump(report.summary(), fh, indent=2)
    fh.write("\n")


def write_message_stream(messages: Iterable[Message], fh: IO[str]) -> None:
    """Serialize messages as JSONL readable back by parse_stream."""
    for m in messages:
        obj: dict = {"id": m.id, "timestamp": m.timestamp.isoformat(), "text": m.text}
        if m.hashtags:
            obj["hashtags"] = list(m.hashtags)
        if m.lat is not None:
            obj["lat"] = m.lat
            obj["lon"] = m.lon
        fh.write(json.dumps(obj, separators=(",", ":")) + "\n")


def write_ground_truth(truths: Iterable[GroundTruth], fh: IO[str]) -> None:
    for t in truths:
        obj = {
            "id": t.id,
            "label": t.label,
            "window_index": t.window_index,
            "phase_index": t.phase_index,
        }
        fh.write(json.dumps(obj, separators=(",", ":")) + "\n")
