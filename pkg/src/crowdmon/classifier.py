"""Bag-of-words emotion scoring: summative message vectors and dominant labels."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from typing import Iterable

from .emotions import EMOTIONS, Emotion, EmotionVector
from .ingest import Message, tokenize
from .lexicon import Lexicon


@dataclass(frozen=True)
class ClassifiedMessage:
    """A message together with its summative vector and dominant-emotion label."""

    message: Message
    vector: EmotionVector
    label: Emotion | None  # None = unclassifiable (all-zero or tied vector)

    @property
    def timestamp(self) -> datetime:
        return self.message.timestamp


def message_vector(lexicon: Lexicon, tokens: Iterable[str]) -> EmotionVector:
    """Componentwise sum of the word vectors of ``tokens``.

    Every occurrence of a repeated word contributes again. Tokens are summed
    in sorted order so the result is bit-identical under any permutation of
    the input.
    """
    anger = fear = happiness = sadness = 0.0
    for token in sorted(tokens):
        v = lexicon.vector(token)
        anger += v.anger
        fear += v.fear
        happiness += v.happiness
        sadness += v.sadness
    return EmotionVector(anger, fear, happiness, sadness)


def dominant_emotion(vector: EmotionVector) -> Emotion | None:
    """The unique strictly-largest component's emotion.

    None when the vector is all-zero or the maximum is attained by two or
    more components: a tie carries no usable signal and must not inject an
    arbitrary emotion into downstream rates.
    """
    weights = vector.as_tuple()
    best = max(weights)
    if best <= 0.0 or weights.count(best) != 1:
        return None
    return EMOTIONS[weights.index(best)]


def classify(lexicon: Lexicon, message: Message) -> ClassifiedMessage:
    """Tokenize, sum word vectors and label with the dominant emotion."""
    vector = message_vector(lexicon, tokenize(message.text))
    return ClassifiedMessage(message, vector, dominant_emotion(vector))
