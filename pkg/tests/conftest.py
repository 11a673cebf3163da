"""Shared fixtures and small builders for the test suite."""

from __future__ import annotations

from datetime import datetime, timezone

import pytest

from crowdmon import EMOTIONS, EmotionVector, Lexicon, Message


def utc(*args) -> datetime:
    return datetime(*args, tzinfo=timezone.utc)


def msg(msg_id: str, ts: datetime, text: str, **kwargs) -> Message:
    return Message(id=msg_id, timestamp=ts, text=text, **kwargs)


def synthetic_lexicon(per_emotion: int = 25) -> Lexicon:
    """Lexicon of alnum words, each with one strictly dominant emotion."""
    vectors = {}
    for e in EMOTIONS:
        for i in range(per_emotion):
            main = 0.5 + 0.5 * (i + 1) / per_emotion
            weights = [0.1 * main] * 4
            weights[e.value - 1] = main
            vectors[f"{e.label}{i:04d}"] = EmotionVector(*weights)
    return Lexicon(vectors, source="<synthetic>")


def write_lexicon_file(path, lexicon: Lexicon):
    """Dump a Lexicon as the on-disk TSV format, full float precision."""
    lines = []
    for word in sorted(lexicon.words()):
        v = lexicon.vector(word)
        for e, weight in zip(EMOTIONS, v.as_tuple()):
            if weight > 0:
                lines.append(f"{e.label}\t{word}\t{weight!r}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.fixture
def toy_lexicon() -> Lexicon:
    """Hand-sized lexicon reused across classifier and pipeline tests."""
    return Lexicon(
        {
            "fury": EmotionVector(anger=0.5),
            "scream": EmotionVector(fear=0.9, sadness=0.1),
            "fun": EmotionVector(happiness=0.8),
            "gloom": EmotionVector(sadness=0.7),
        },
        source="<toy>",
    )
