"""Loading and lookup of word -> emotion-weight lexicons.

Lexicon files are UTF-8 text with one tab-separated triple per line::

    emotion<TAB>word<TAB>score

``#``-prefixed lines are comments and blank lines are ignored. Scores are
non-negative association strengths. Entries for emotions outside the
four-emotion model (surprise, disgust, ...) are dropped on load; the
``joy`` label is accepted as an alias for happiness, since the common
hashtag-derived emotion lexicons use that name.
"""

from __future__ import annotations

import math
from typing import Iterator, Mapping

from .emotions import ZERO_VECTOR, Emotion, EmotionVector


class LexiconError(Exception):
    """Base class for lexicon loading failures."""


class MalformedLineError(LexiconError):
    """A non-comment line does not parse as ``emotion<TAB>word<TAB>score``."""

    def __init__(self, path, line_no: int, reason: str):
        super().__init__(f"{path}:{line_no}: {reason}")
        self.path = str(path)
        self.line_no = line_no
        self.reason = reason


class EmptyLexiconError(LexiconError):
    """No usable entries survived filtering."""


_LABEL_TO_EMOTION = {
    "anger": Emotion.ANGER,
    "fear": Emotion.FEAR,
    "happiness": Emotion.HAPPINESS,
    "joy": Emotion.HAPPINESS,
    "sadness": Emotion.SADNESS,
}


class Lexicon:
    """Immutable word -> EmotionVector mapping; lookups never fail.

    Out-of-vocabulary words map to the zero vector. Instances are safe for
    unrestricted concurrent reads once constructed.
    """

    def __init__(
        self,
        vectors: Mapping[str, EmotionVector],
        source: str = "",
        clamped_negative: int = 0,
    ):
        for word in vectors:
            if not word or word != word.lower() or any(ch.isspace() for ch in word):
                raise ValueError(f"invalid lexicon key: {word!r}")
        self._vectors = dict(vectors)
        self.source = str(source)
        self.clamped_negative = clamped_negative

    def vector(self, word: str) -> EmotionVector:
        """Weight vector for ``word``; the zero vector when unknown."""
        return self._vectors.get(word, ZERO_VECTOR)

    def words(self) -> Iterator[str]:
        return iter(self._vectors)

    def __contains__(self, word: object) -> bool:
        return word in self._vectors

    def __len__(self) -> int:
        return len(self._vectors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._vectors == other._vectors

    def __repr__(self) -> str:
        return f"Lexicon({len(self)} words from {self.source or '<memory>'})"


def load_lexicon(path) -> Lexicon:
    """Read a tab-separated emotion lexicon from ``path``.

    Words are lowercased on load. A word listed under several model emotions
    gets one merged vector; duplicate (emotion, word) lines accumulate.
    Negative scores clamp to zero and are counted on the result's
    ``clamped_negative``.

    Raises:
        FileNotFoundError: the file does not exist.
        MalformedLineError: a non-comment line is not a valid triple
            (processing aborts; the line number is reported).
        EmptyLexiconError: zero usable entries after filtering.
    """
    staged: dict[str, dict[Emotion, list[float]]] = {}
    clamped = 0
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise MalformedLineError(
                    path, line_no, f"expected 3 tab-separated fields, got {len(parts)}"
                )
            label, word, score_raw = parts
            try:
                score = float(score_raw)
            except ValueError:
                raise MalformedLineError(
                    path, line_no, f"unparseable score {score_raw!r}"
                ) from None
            if not math.isfinite(score):
                raise MalformedLineError(path, line_no, f"non-finite score {score_raw!r}")
            if not word or any(ch.isspace() for ch in word):
                raise MalformedLineError(path, line_no, f"invalid word field {word!r}")
            emotion = _LABEL_TO_EMOTION.get(label.strip().lower())
            if emotion is None:
                continue  # outside the four-emotion model
            if score < 0:
                score = 0.0
                clamped += 1
            staged.setdefault(word.lower(), {}).setdefault(emotion, []).append(score)
    if not staged:
        raise EmptyLexiconError(f"no usable entries in {path}")
    vectors = {}
    for word, by_emotion in staged.items():
        weights = [0.0, 0.0, 0.0, 0.0]
        for emotion, values in by_emotion.items():
            # fsum so duplicate entries merge independently of file order
            weights[emotion.value - 1] = math.fsum(values)
        vectors[word] = EmotionVector(*weights)
    return Lexicon(vectors, source=str(path), clamped_negative=clamped)
