"""Message stream parsing, tweet-style tokenization and event filtering."""

from __future__ import annotations

import csv
import json
import re
import string
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Iterable, Iterator


class StreamFormatError(Exception):
    """The input file does not look like the declared format."""


#: Exact header required for CSV streams.
CSV_HEADER = ["id", "timestamp", "text", "hashtags", "lat", "lon"]

_URL_RE = re.compile(r"(?:https?://|www\.)\S*")
_MENTION_RE = re.compile(r"(?<!\S)@\S+")
_HASHTAG_RE = re.compile(r"#(\w+)")
_EDGE_PUNCT = string.punctuation + "“”‘’«»‹›¿¡…–—´`"


def parse_instant(value) -> datetime | None:
    """Parse an ISO-8601 timestamp carrying an explicit UTC offset.

    Offset-free strings and anything unparseable return None rather than
    guessing a zone; all downstream arithmetic happens in UTC.
    """
    if not isinstance(value, str):
        return None
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    try:
        ts = datetime.fromisoformat(text)
    except ValueError:
        return None
    if ts.tzinfo is None:
        return None
    return ts.astimezone(timezone.utc)


@dataclass(frozen=True)
class Message:
    """One short social-media message, timestamp normalized to UTC."""

    id: str
    timestamp: datetime
    text: str
    hashtags: tuple[str, ...] = ()
    lat: float | None = None
    lon: float | None = None

    def __post_init__(self):
        if self.timestamp.tzinfo is None:
            raise ValueError("naive timestamp; an explicit UTC offset is required")
        object.__setattr__(self, "timestamp", self.timestamp.astimezone(timezone.utc))
        object.__setattr__(
            self, "hashtags", tuple(t.lower().lstrip("#") for t in self.hashtags)
        )
        if (self.lat is None) != (self.lon is None):
            raise ValueError("geo tag needs both lat and lon")
        if self.lat is not None:
            if not -90.0 <= self.lat <= 90.0:
                raise ValueError(f"latitude out of range: {self.lat}")
            if not -180.0 <= self.lon <= 180.0:
                raise ValueError(f"longitude out of range: {self.lon}")


@dataclass
class ParseStats:
    """Mutable counter of records skipped during one parse pass."""

    skipped: int = 0


def tokenize(text: str) -> list[str]:
    """Break text into lowercase unigram tokens.

    URLs and @-mentions are removed whole, the ``#`` sigil is stripped so
    hashtag bodies score like ordinary words, and leading/trailing
    punctuation is trimmed from every whitespace-separated piece (internal
    apostrophes survive). Repeated words stay repeated; downstream scoring
    is frequency-based.
    """
    lowered = text.lower()
    lowered = _URL_RE.sub(" ", lowered)
    lowered = _MENTION_RE.sub(" ", lowered)
    tokens = []
    for piece in lowered.split():
        token = piece.strip(_EDGE_PUNCT)
        if token:
            tokens.append(token)
    return tokens


def text_hashtags(text: str) -> set[str]:
    """Lowercased hashtag bodies occurring literally in the text."""
    return {m.group(1).lower() for m in _HASHTAG_RE.finditer(text)}


@dataclass(frozen=True)
class BoundingBox:
    lat_min: float
    lon_min: float
    lat_max: float
    lon_max: float

    def __post_init__(self):
        if self.lat_min > self.lat_max or self.lon_min > self.lon_max:
            raise ValueError("bounding box corners must be ordered (min <= max)")

    @classmethod
    def from_corners(cls, lat1, lon1, lat2, lon2) -> BoundingBox:
        return cls(min(lat1, lat2), min(lon1, lon2), max(lat1, lat2), max(lon1, lon2))

    def contains(self, lat: float, lon: float) -> bool:
        return self.lat_min <= lat <= self.lat_max and self.lon_min <= lon <= self.lon_max


@dataclass(frozen=True)
class EventFilter:
    """Conjunction of optional clauses pinning messages to one event.

    Present clauses AND together; the hashtag clause matches when the
    message carries any of the required tags (in its hashtag field or as a
    literal ``#tag`` in the text). The time range is half-open [start, end).
    """

    start: datetime | None = None
    end: datetime | None = None
    hashtags: frozenset[str] | None = None
    bbox: BoundingBox | None = None

    def __post_init__(self):
        if self.start is not None and self.end is not None and not self.start < self.end:
            raise ValueError("time range requires start < end")
        if self.hashtags is not None:
            object.__setattr__(
                self, "hashtags", frozenset(t.lower().lstrip("#") for t in self.hashtags)
            )

    def matches(self, message: Message) -> bool:
        if self.start is not None and message.timestamp < self.start:
            return False
        if self.end is not None and message.timestamp >= self.end:
            return False
        if self.hashtags is not None:
            tags = set(message.hashtags) | text_hashtags(message.text)
            if not tags & self.hashtags:
                return False
        if self.bbox is not None:
            if message.lat is None or not self.bbox.contains(message.lat, message.lon):
                return False
        return True


def apply_filter(messages: Iterable[Message], event_filter: EventFilter) -> Iterator[Message]:
    """Keep exactly the messages satisfying every present filter clause."""
    return (m for m in messages if event_filter.matches(m))


def parse_stream(path, fmt: str = "jsonl", stats: ParseStats | None = None) -> Iterator[Message]:
    """Yield messages from a JSONL or CSV file in file order.

    Records that cannot be turned into a valid Message (unparseable or
    offset-free timestamp, missing text, out-of-range geo, ...) are skipped
    and counted on ``stats``, never fatal. Fatal cases: a CSV header
    mismatch, or a first JSONL record that is not valid JSON.
    """
    if stats is None:
        stats = ParseStats()
    if fmt == "jsonl":
        return _parse_jsonl(path, stats)
    if fmt == "csv":
        return _parse_csv(path, stats)
    raise ValueError(f"unknown stream format: {fmt!r}")


def _parse_jsonl(path, stats: ParseStats) -> Iterator[Message]:
    with open(path, encoding="utf-8") as fh:
        first_record = True
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError:
                if first_record:
                    raise StreamFormatError(
                        f"{path}: first record is not valid JSON"
                    ) from None
                stats.skipped += 1
                continue
            first_record = False
            message = _message_from_json(obj)
            if message is None:
                stats.skipped += 1
            else:
                yield message


def _parse_csv(path, stats: ParseStats) -> Iterator[Message]:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            return  # zero-byte file: empty sequence
        if header != CSV_HEADER:
            raise StreamFormatError(
                f"{path}: expected CSV header {','.join(CSV_HEADER)!r}"
            )
        for row in reader:
            if not row:
                continue
            if len(row) != len(CSV_HEADER):
                stats.skipped += 1
                continue
            message = _message_from_row(row)
            if message is None:
                stats.skipped += 1
            else:
                yield message


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _message_from_json(obj) -> Message | None:
    if not isinstance(obj, dict):
        return None
    msg_id = obj.get("id")
    if _is_number(msg_id):
        msg_id = str(msg_id)
    if not isinstance(msg_id, str) or not msg_id:
        return None
    ts = parse_instant(obj.get("timestamp"))
    if ts is None:
        return None
    text = obj.get("text")
    if not isinstance(text, str):
        return None
    raw_tags = obj.get("hashtags", [])
    if raw_tags is None:
        raw_tags = []
    if not isinstance(raw_tags, list) or not all(isinstance(t, str) for t in raw_tags):
        return None
    lat_raw, lon_raw = obj.get("lat"), obj.get("lon")
    if (lat_raw is None) != (lon_raw is None):
        return None
    lat = lon = None
    if lat_raw is not None:
        if not _is_number(lat_raw) or not _is_number(lon_raw):
            return None
        lat, lon = float(lat_raw), float(lon_raw)
    try:
        return Message(
            id=msg_id, timestamp=ts, text=text, hashtags=tuple(raw_tags), lat=lat, lon=lon
        )
    except ValueError:
        return None


def _message_from_row(row: list[str]) -> Message | None:
    msg_id, ts_raw, text, tags_raw, lat_raw, lon_raw = row
    if not msg_id or not text:
        return None
    ts = parse_instant(ts_raw)
    if ts is None:
        return None
    tags = tuple(t for t in tags_raw.split("|") if t) if tags_raw else ()
    if bool(lat_raw) != bool(lon_raw):
        return None
    lat = lon = None
    if lat_raw:
        try:
            lat, lon = float(lat_raw), float(lon_raw)
        except ValueError:
            return None
    try:
        return Message(id=msg_id, timestamp=ts, text=text, hashtags=tags, lat=lat, lon=lon)
    except ValueError:
        return None
