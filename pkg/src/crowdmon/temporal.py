"""Windowed emotion rates and trailing surge statistics.

Classified messages are bucketed into fixed half-open intervals. Each window
with enough classified messages gets per-emotion rates (fractions of the
classified messages; unclassified ones never enter the denominator), and
every rate is scored against the trailing moving average as a z-score. A
z-score strictly above the configured threshold marks that emotion's level
as high for the window.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, replace
from datetime import datetime, timedelta
from enum import Enum
from typing import Iterable, Sequence

from .classifier import ClassifiedMessage
from .emotions import EMOTIONS


class Level(Enum):
    LOW = "low"
    HIGH = "high"


@dataclass(frozen=True)
class AnalysisConfig:
    """Tunable knobs of the windowed analysis."""

    interval_minutes: int = 15
    z_threshold: float = 1.0
    ma_window: int = 8          # trailing data windows feeding the moving stats
    min_classified: int = 1     # fewer classified messages -> window has no data
    std_epsilon: float = 1e-9   # sigma below this counts as a constant baseline
    z_cap: float = 100.0        # finite stand-in for a jump off a constant baseline

    def __post_init__(self):
        if self.interval_minutes < 1:
            raise ValueError("interval_minutes must be >= 1")
        if self.ma_window < 2:
            raise ValueError("ma_window must be >= 2")
        if not self.z_cap > self.z_threshold > 0:
            raise ValueError("need z_cap > z_threshold > 0")
        if self.min_classified < 0:
            raise ValueError("min_classified must be >= 0")
        if self.std_epsilon <= 0:
            raise ValueError("std_epsilon must be > 0")

    @property
    def interval(self) -> timedelta:
        return timedelta(minutes=self.interval_minutes)


@dataclass(frozen=True)
class WindowStats:
    """Per-interval counts and derived statistics.

    ``counts`` holds classified messages per emotion in canonical order.
    ``rates``/``zscores``/``levels`` are None while undefined: a window below
    ``min_classified`` has no rates at all, and z-scores need at least two
    prior data windows of history.
    """

    index: int
    start: datetime
    end: datetime
    n_total: int
    counts: tuple[int, int, int, int]
    rates: tuple[float, float, float, float] | None = None
    zscores: tuple[float, float, float, float] | None = None
    levels: tuple[Level, Level, Level, Level] | None = None

    @property
    def n_classified(self) -> int:
        return sum(self.counts)


def default_origin(first_timestamp: datetime, interval_minutes: int) -> datetime:
    """First timestamp truncated down to a whole interval boundary of its hour."""
    hour = first_timestamp.replace(minute=0, second=0, microsecond=0)
    interval = timedelta(minutes=interval_minutes)
    return hour + ((first_timestamp - hour) // interval) * interval


def partition_windows(
    messages: Iterable[ClassifiedMessage],
    config: AnalysisConfig,
    origin: datetime | None = None,
) -> list[WindowStats]:
    """Bucket classified messages into contiguous half-open windows.

    Windows are [origin + k*t, origin + (k+1)*t); every message lands in
    exactly one. Empty windows between the first and last occupied one are
    emitted explicitly. Rates/z-scores/levels are left unfilled here.
    """
    ordered = sorted(messages, key=lambda cm: cm.message.timestamp)
    if not ordered:
        return []
    interval = config.interval
    if origin is None:
        origin = default_origin(ordered[0].message.timestamp, config.interval_minutes)
    elif ordered[0].message.timestamp < origin:
        raise ValueError("window origin must not be after the first message")
    buckets: dict[int, list[int]] = {}  # k -> [anger, fear, happiness, sadness, total]
    for cm in ordered:
        k = (cm.message.timestamp - origin) // interval
        bucket = buckets.setdefault(k, [0, 0, 0, 0, 0])
        bucket[4] += 1
        if cm.label is not None:
            bucket[cm.label.value - 1] += 1
    first, last = min(buckets), max(buckets)
    windows = []
    for k in range(first, last + 1):
        bucket = buckets.get(k, [0, 0, 0, 0, 0])
        windows.append(
            WindowStats(
                index=k,
                start=origin + k * interval,
                end=origin + (k + 1) * interval,
                n_total=bucket[4],
                counts=(bucket[0], bucket[1], bucket[2], bucket[3]),
            )
        )
    return windows


def emotion_rates(
    counts: Sequence[int], config: AnalysisConfig
) -> tuple[float, float, float, float] | None:
    """Each count over the classified total, or None below min_classified."""
    total = sum(counts)
    if total < max(1, config.min_classified):
        return None
    a, f, h, s = counts
    return (a / total, f / total, h / total, s / total)


def zscore(current: float, history: Sequence[float], config: AnalysisConfig) -> float | None:
    """Deviation of ``current`` from the trailing mean, in trailing-sigma units.

    ``history`` holds the same emotion's rates from the most recent prior
    data windows (current excluded). Undefined (None) until two history
    points exist. A near-zero sigma means a constant baseline: matching the
    mean scores 0, any jump scores +-z_cap.
    """
    n = len(history)
    if n < 2:
        return None
    mean = sum(history) / n
    var = sum((x - mean) ** 2 for x in history) / n  # population variance
    sigma = math.sqrt(var)
    delta = current - mean
    if sigma < config.std_epsilon:
        if abs(delta) < config.std_epsilon:
            return 0.0
        return math.copysign(config.z_cap, delta)
    return delta / sigma


def assign_levels(
    window: WindowStats, config: AnalysisConfig
) -> tuple[Level, Level, Level, Level] | None:
    """High exactly when the z-score strictly exceeds the threshold."""
    if window.zscores is None:
        return None
    a, f, h, s = (
        Level.HIGH if z > config.z_threshold else Level.LOW for z in window.zscores
    )
    return (a, f, h, s)


class WindowAnalyzer:
    """Single-writer sequential stage filling rates, z-scores and levels.

    Feed counted windows in index order. Per-emotion buffers hold the rates
    of up to ``ma_window`` most recent windows that had data; windows without
    data never enter the buffers, so statistics of window k depend only on
    earlier windows plus k itself.
    """

    def __init__(self, config: AnalysisConfig):
        self.config = config
        self._history: tuple[deque, ...] = tuple(
            deque(maxlen=config.ma_window) for _ in EMOTIONS
        )

    def update(self, window: WindowStats) -> WindowStats:
        rates = emotion_rates(window.counts, self.config)
        if rates is None:
            return replace(window, rates=None, zscores=None, levels=None)
        if len(self._history[0]) >= 2:
            zscores = tuple(
                zscore(rates[i], self._history[i], self.config) for i in range(4)
            )
        else:
            zscores = None
        out = replace(window, rates=rates, zscores=zscores)
        out = replace(out, levels=assign_levels(out, self.config))
        for i in range(4):
            self._history[i].append(rates[i])
        return out


def compute_stats(
    windows: Iterable[WindowStats], config: AnalysisConfig
) -> list[WindowStats]:
    """Batch convenience over WindowAnalyzer for pre-counted windows."""
    analyzer = WindowAnalyzer(config)
    return [analyzer.update(w) for w in windows]
