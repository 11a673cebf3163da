"""End-to-end composition: classify -> window -> rates/z-scores -> levels -> rules."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from typing import Iterable, Sequence

from .classifier import ClassifiedMessage, classify
from .crowdmodel import Inference, infer_crowd
from .ingest import Message
from .lexicon import Lexicon
from .temporal import AnalysisConfig, WindowAnalyzer, WindowStats, partition_windows

STATUS_OK = "ok"
STATUS_NO_DATA = "no_data"          # too few classified messages for rates
STATUS_WARMUP = "warmup"            # rates exist but z history is still short
STATUS_INDETERMINATE = "indeterminate"  # levels defined but no rule covers them


@dataclass(frozen=True)
class WindowRecord:
    """One analyzed window: statistics plus (when defined) the crowd inference."""

    stats: WindowStats
    inference: Inference | None
    status: str


def window_record(stats: WindowStats) -> WindowRecord:
    if stats.rates is None:
        return WindowRecord(stats, None, STATUS_NO_DATA)
    if stats.levels is None:
        return WindowRecord(stats, None, STATUS_WARMUP)
    inference = infer_crowd(stats.levels, window_index=stats.index)
    status = STATUS_INDETERMINATE if inference.indeterminate else STATUS_OK
    return WindowRecord(stats, inference, status)


def analyze_classified(
    classified: Sequence[ClassifiedMessage],
    config: AnalysisConfig,
    origin: datetime | None = None,
) -> list[WindowRecord]:
    """Window already-classified messages and fill statistics and inferences.

    Statistics are strictly trailing: the records for windows 0..k never
    change when later messages are appended to the stream.
    """
    windows = partition_windows(classified, config, origin)
    analyzer = WindowAnalyzer(config)
    return [window_record(analyzer.update(w)) for w in windows]


def analyze_messages(
    lexicon: Lexicon,
    messages: Iterable[Message],
    config: AnalysisConfig,
    origin: datetime | None = None,
) -> list[WindowRecord]:
    """Run the full pipeline over (already filtered) raw messages."""
    classified = [classify(lexicon, m) for m in messages]
    return analyze_classified(classified, config, origin)
