"""Four-emotion model: the emotion enumeration and association-weight vectors."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class Emotion(Enum):
    """Basic emotions tracked by the monitor, in canonical index order."""

    ANGER = 1
    FEAR = 2
    HAPPINESS = 3
    SADNESS = 4

    @property
    def label(self) -> str:
        return self.name.lower()


#: Canonical iteration order; counts/rates tuples follow this everywhere.
EMOTIONS: tuple[Emotion, ...] = tuple(Emotion)


@dataclass(frozen=True)
class EmotionVector:
    """Association weights for (anger, fear, happiness, sadness).

    Weights are unitless non-negative association strengths. A message's
    vector is the componentwise sum over its word occurrences.
    """

    anger: float = 0.0
    fear: float = 0.0
    happiness: float = 0.0
    sadness: float = 0.0

    def __post_init__(self) -> None:
        for emotion, value in zip(EMOTIONS, self.as_tuple()):
            if not math.isfinite(value):
                raise ValueError(f"non-finite {emotion.label} weight: {value!r}")
            if value < 0:
                raise ValueError(f"negative {emotion.label} weight: {value!r}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.anger, self.fear, self.happiness, self.sadness)

    def component(self, emotion: Emotion) -> float:
        return self.as_tuple()[emotion.value - 1]

    def __add__(self, other: EmotionVector) -> EmotionVector:
        return EmotionVector(
            self.anger + other.anger,
            self.fear + other.fear,
            self.happiness + other.happiness,
            self.sadness + other.sadness,
        )

    def scaled(self, factor: float) -> EmotionVector:
        if factor < 0:
            raise ValueError("scale factor must be non-negative")
        return EmotionVector(
            self.anger * factor,
            self.fear * factor,
            self.happiness * factor,
            self.sadness * factor,
        )


ZERO_VECTOR = EmotionVector()
