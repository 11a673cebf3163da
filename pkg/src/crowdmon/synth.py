"""Seeded synthetic message streams with known per-window emotion mixes.

The generator is the test double for a live event feed. A schedule is a list
of phases; each phase fixes an emotion mix, a message rate and an
out-of-vocabulary fraction for some number of windows. Per-window label
counts follow the mix exactly (largest-remainder apportionment), so a
window's ground-truth rates are reproducible; the seeded RNG only shuffles
label order, picks words and places timestamps. Every message text is built
from lexicon words whose unique dominant emotion matches the message's
assigned label, so classification recovers the ground truth by construction.
"""

from __future__ import annotations

import json
import math
import random
import string
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from typing import Sequence

from .classifier import dominant_emotion, message_vector
from .emotions import EMOTIONS, Emotion
from .ingest import Message, tokenize
from .lexicon import Lexicon

DEFAULT_ORIGIN = datetime(2020, 1, 1, tzinfo=timezone.utc)


class InfeasibleScheduleError(Exception):
    """The lexicon cannot realize an emotion the schedule requires."""


@dataclass(frozen=True)
class Phase:
    """One homogeneous stretch of the schedule.

    ``mix`` is (anger, fear, happiness, sadness) proportions summing to 1;
    ``rate`` is messages per window; ``oov`` is the fraction of messages
    built purely from unknown words (they classify as unlabelled).
    """

    windows: int
    mix: tuple[float, float, float, float]
    rate: int
    oov: float = 0.0

    def __post_init__(self):
        if self.windows < 1:
            raise ValueError("phase needs at least one window")
        if self.rate < 0:
            raise ValueError("negative message rate")
        if not 0.0 <= self.oov < 1.0:
            raise ValueError("oov fraction must be in [0, 1)")
        mix = tuple(float(p) for p in self.mix)
        if len(mix) != 4 or any(p < 0 for p in mix):
            raise ValueError(f"mix must be four non-negative proportions, got {mix!r}")
        if abs(sum(mix) - 1.0) > 1e-9:
            raise ValueError(f"phase mix must sum to 1, got {sum(mix)!r}")
        object.__setattr__(self, "mix", mix)


@dataclass(frozen=True)
class EmotionSchedule:
    phases: tuple[Phase, ...]

    def __post_init__(self):
        phases = tuple(self.phases)
        if not phases:
            raise ValueError("schedule needs at least one phase")
        object.__setattr__(self, "phases", phases)

    @property
    def total_windows(self) -> int:
        return sum(p.windows for p in self.phases)

    @property
    def total_messages(self) -> int:
        return sum(p.windows * p.rate for p in self.phases)


def load_schedule(path) -> EmotionSchedule:
    """Read a schedule file: a JSON array of {windows, mix, rate, oov} phases."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ValueError("schedule file must hold a JSON array of phases")
    phases = []
    for i, entry in enumerate(data):
        try:
            phases.append(
                Phase(
                    windows=int(entry["windows"]),
                    mix=tuple(entry["mix"]),
                    rate=int(entry["rate"]),
                    oov=float(entry.get("oov", 0.0)),
                )
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"schedule phase {i}: missing or bad field ({exc})") from None
    return EmotionSchedule(tuple(phases))


@dataclass(frozen=True)
class GroundTruth:
    """True label and placement of one generated message."""

    id: str
    label: str  # emotion label, or "unclassified" for pure-OOV messages
    window_index: int
    phase_index: int


def emotion_pools(lexicon: Lexicon) -> dict[Emotion, list[str]]:
    """Tokenizer-stable lexicon words grouped by unique dominant emotion."""
    pools: dict[Emotion, list[str]] = {e: [] for e in EMOTIONS}
    for word in sorted(lexicon.words()):
        label = dominant_emotion(lexicon.vector(word))
        if label is not None and tokenize(word) == [word]:
            pools[label].append(word)
    return pools


def apportion(mix: Sequence[float], total: int) -> tuple[int, int, int, int]:
    """Largest-remainder split of ``total`` by ``mix``; ties break canonically."""
    quotas = [p * total for p in mix]
    base = [math.floor(q) for q in quotas]
    leftover = total - sum(base)
    by_remainder = sorted(range(4), key=lambda i: (-(quotas[i] - base[i]), i))
    for i in by_remainder[:leftover]:
        base[i] += 1
    return (base[0], base[1], base[2], base[3])


def generate_messages(
    schedule: EmotionSchedule,
    lexicon: Lexicon,
    seed: int,
    *,
    interval_minutes: int = 15,
    origin: datetime | None = None,
) -> tuple[list[Message], list[GroundTruth]]:
    """Build the synthetic stream for ``schedule``.

    Returns (messages, truths), both in timestamp order; timestamps spread
    uniformly within each window. Rerunning with the same arguments yields
    identical output.

    Raises InfeasibleScheduleError when the lexicon has no word whose unique
    dominant emotion matches an emotion the schedule needs.
    """
    rng = random.Random(seed)
    if origin is None:
        origin = DEFAULT_ORIGIN
    interval_us = interval_minutes * 60 * 1_000_000
    pools = emotion_pools(lexicon)
    needed = {
        emotion
        for phase in schedule.phases
        for emotion, p in zip(EMOTIONS, phase.mix)
        if p > 0
    }
    missing = sorted(e.label for e in needed if not pools[e])
    if missing:
        raise InfeasibleScheduleError(
            "lexicon has no uniquely dominant word for: " + ", ".join(missing)
        )
    messages: list[Message] = []
    truths: list[GroundTruth] = []
    counter = 0
    window_index = 0
    for phase_index, phase in enumerate(schedule.phases):
        for _ in range(phase.windows):
            start = origin + timedelta(minutes=interval_minutes) * window_index
            n = phase.rate
            n_oov = round(n * phase.oov)
            labels: list[Emotion | None] = [None] * n_oov
            for emotion, count in zip(EMOTIONS, apportion(phase.mix, n - n_oov)):
                labels.extend([emotion] * count)
            rng.shuffle(labels)
            offsets = sorted(rng.random() for _ in range(n))
            for offset, label in zip(offsets, labels):
                counter += 1
                msg_id = f"m{counter:07d}"
                timestamp = start + timedelta(microseconds=int(offset * interval_us))
                messages.append(
                    Message(id=msg_id, timestamp=timestamp, text=_text_for(rng, pools, lexicon, label))
                )
                truths.append(
                    GroundTruth(
                        id=msg_id,
                        label=label.label if label is not None else "unclassified",
                        window_index=window_index,
                        phase_index=phase_index,
                    )
                )
            window_index += 1
    return messages, truths


def _text_for(rng: random.Random, pools, lexicon: Lexicon, label: Emotion | None) -> str:
    if label is None:
        return " ".join(_oov_word(rng, lexicon) for _ in range(rng.randint(1, 2)))
    pool = pools[label]
    words = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
    if len(words) > 1 and dominant_emotion(message_vector(lexicon, words)) is not label:
        # pathological float collision in the sum; a single word is always exact
        return rng.choice(pool)
    return " ".join(words)


def _oov_word(rng: random.Random, lexicon: Lexicon) -> str:
    while True:
        word = "".join(rng.choice(string.ascii_lowercase) for _ in range(10))
        if word not in lexicon:
            return word
