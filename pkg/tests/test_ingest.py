import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import msg, utc

from crowdmon import (
    BoundingBox,
    EventFilter,
    Message,
    ParseStats,
    StreamFormatError,
    apply_filter,
    parse_instant,
    parse_stream,
    tokenize,
)


# ---------------------------------------------------------------- timestamps

def test_parse_instant_accepts_z_suffix():
    assert parse_instant("2014-05-04T05:45:00Z") == utc(2014, 5, 4, 5, 45)


def test_parse_instant_converts_offsets_to_utc():
    assert parse_instant("2014-05-03T22:45:00-07:00") == utc(2014, 5, 4, 5, 45)


@pytest.mark.parametrize("bad", ["not-a-date", "2014-05-04T05:45:00", "", 17, None])
def test_parse_instant_rejects_offset_free_and_garbage(bad):
    assert parse_instant(bad) is None


def test_message_requires_aware_timestamp():
    from datetime import datetime

    with pytest.raises(ValueError):
        Message(id="1", timestamp=datetime(2014, 5, 4), text="x")


def test_message_geo_validation():
    with pytest.raises(ValueError):
        msg("1", utc(2014, 5, 4), "x", lat=95.0, lon=0.0)
    with pytest.raises(ValueError):
        msg("1", utc(2014, 5, 4), "x", lat=1.0, lon=181.0)
    with pytest.raises(ValueError):
        Message(id="1", timestamp=utc(2014, 5, 4), text="x", lat=1.0)


# ---------------------------------------------------------------- jsonl/csv

def test_jsonl_line_maps_directly(tmp_path):
    path = tmp_path / "s.jsonl"
    path.write_text('{"id":"1","timestamp":"2014-05-04T05:45:00Z","text":"run!!"}\n')
    (m,) = list(parse_stream(path, "jsonl"))
    assert m.id == "1"
    assert m.timestamp == utc(2014, 5, 4, 5, 45)
    assert m.text == "run!!"


def test_jsonl_bad_timestamp_skipped_and_counted(tmp_path):
    path = tmp_path / "s.jsonl"
    path.write_text(
        '{"id":"1","timestamp":"not-a-date","text":"a"}\n'
        '{"id":"2","timestamp":"2014-05-04T05:45:00Z","text":"b"}\n'
    )
    stats = ParseStats()
    out = list(parse_stream(path, "jsonl", stats))
    assert [m.id for m in out] == ["2"]
    assert stats.skipped == 1


def test_empty_file_yields_nothing(tmp_path):
    path = tmp_path / "s.jsonl"
    path.write_text("")
    assert list(parse_stream(path, "jsonl")) == []


def test_jsonl_first_record_must_be_json(tmp_path):
    path = tmp_path / "s.jsonl"
    path.write_text("id,timestamp,text\n")
    with pytest.raises(StreamFormatError):
        list(parse_stream(path, "jsonl"))


def test_jsonl_later_garbage_is_skipped(tmp_path):
    path = tmp_path / "s.jsonl"
    path.write_text(
        '{"id":"1","timestamp":"2014-05-04T05:45:00Z","text":"a"}\n'
        "{{{not json\n"
    )
    stats = ParseStats()
    assert len(list(parse_stream(path, "jsonl", stats))) == 1
    assert stats.skipped == 1


def test_jsonl_numeric_id_coerced_and_extras_ignored(tmp_path):
    path = tmp_path / "s.jsonl"
    path.write_text(
        '{"id":7,"timestamp":"2014-05-04T05:45:00Z","text":"a","label":"x"}\n'
    )
    (m,) = list(parse_stream(path, "jsonl"))
    assert m.id == "7"


def test_jsonl_skips_missing_text_and_bad_geo(tmp_path):
    path = tmp_path / "s.jsonl"
    records = [
        {"id": "1", "timestamp": "2014-05-04T05:45:00Z"},  # no text
        {"id": "2", "timestamp": "2014-05-04T05:45:00Z", "text": "a", "lat": 95, "lon": 0},
        {"id": "3", "timestamp": "2014-05-04T05:45:00Z", "text": "a", "lat": 36.1},
        {"id": "4", "timestamp": "2014-05-04T05:45:00Z", "text": "ok", "lat": 36.1, "lon": -115.2},
    ]
    path.write_text("\n".join(json.dumps(r) for r in records) + "\n")
    stats = ParseStats()
    out = list(parse_stream(path, "jsonl", stats))
    assert [m.id for m in out] == ["4"]
    assert out[0].lat == pytest.approx(36.1)
    assert stats.skipped == 3


def test_csv_parses_and_header_is_checked(tmp_path):
    good = tmp_path / "s.csv"
    good.write_text(
        "id,timestamp,text,hashtags,lat,lon\n"
        '1,2014-05-04T05:45:00Z,"help, now",MainArena|boxing,36.1,-115.2\n'
        "2,2014-05-04T05:46:00Z,calm,,,\n"
    )
    out = list(parse_stream(good, "csv"))
    assert len(out) == 2
    assert out[0].hashtags == ("mainarena", "boxing")
    assert out[0].lat == pytest.approx(36.1)
    assert out[1].hashtags == () and out[1].lat is None

    bad = tmp_path / "bad.csv"
    bad.write_text("id,time,text\n1,x,y\n")
    with pytest.raises(StreamFormatError):
        list(parse_stream(bad, "csv"))


def test_csv_bad_rows_skipped(tmp_path):
    path = tmp_path / "s.csv"
    path.write_text(
        "id,timestamp,text,hashtags,lat,lon\n"
        "1,2014-05-04T05:45:00Z,ok,,,\n"
        "2,not-a-date,x,,,\n"
        "3,2014-05-04T05:45:00Z,,,,\n"
        "4,2014-05-04T05:45:00Z,x,,36.1,\n"
    )
    stats = ParseStats()
    out = list(parse_stream(path, "csv", stats))
    assert [m.id for m in out] == ["1"]
    assert stats.skipped == 3


def test_unknown_format_rejected(tmp_path):
    with pytest.raises(ValueError):
        parse_stream(tmp_path / "x", "xml")


# ---------------------------------------------------------------- tokenize

def test_tokenize_strips_urls_mentions_and_hashtag_sigils():
    assert tokenize("I'm SCARED!! #MainArena http://t.co/x @joe") == [
        "i'm",
        "scared",
        "mainarena",
    ]


def test_tokenize_empty_text():
    assert tokenize("") == []


def test_tokenize_preserves_duplicates():
    assert tokenize("run run RUN") == ["run", "run", "run"]


def test_tokenize_keeps_internal_apostrophes():
    assert tokenize("don't 'quoted'") == ["don't", "quoted"]


def test_tokenize_removes_www_urls():
    assert tokenize("see www.example.com now") == ["see", "now"]


@given(st.text(max_size=300))
def test_tokens_are_lowercase_nonempty_no_whitespace(text):
    for token in tokenize(text):
        assert token
        assert token == token.lower()
        assert not any(ch.isspace() for ch in token)


@given(st.text(max_size=300))
def test_tokenize_idempotent_on_own_tokens(text):
    for token in tokenize(text):
        assert tokenize(token) == [token]


@given(st.text(max_size=300))
def test_tokenize_deterministic(text):
    assert tokenize(text) == tokenize(text)


# ---------------------------------------------------------------- filtering

def _stream():
    return [
        msg("1", utc(2014, 5, 4, 5, 0), "fight night #MainArena"),
        msg("2", utc(2014, 5, 4, 5, 30), "so calm", hashtags=("other",)),
        msg("3", utc(2014, 5, 4, 6, 0), "boxing", lat=36.1, lon=-115.17),
        msg("4", utc(2014, 5, 4, 7, 0), "late tweet #mainarena"),
    ]


def test_hashtag_clause_matches_text_occurrences():
    kept = list(apply_filter(_stream(), EventFilter(hashtags=frozenset({"mainarena"}))))
    assert [m.id for m in kept] == ["1", "4"]


def test_empty_filter_is_identity():
    stream = _stream()
    assert list(apply_filter(stream, EventFilter())) == stream


def test_time_range_is_half_open():
    f = EventFilter(start=utc(2014, 5, 4, 5, 0), end=utc(2014, 5, 4, 6, 0))
    kept = list(apply_filter(_stream(), f))
    assert [m.id for m in kept] == ["1", "2"]


def test_bbox_requires_geo_present_and_inside():
    box = BoundingBox.from_corners(36.2, -115.3, 36.0, -115.0)
    kept = list(apply_filter(_stream(), EventFilter(bbox=box)))
    assert [m.id for m in kept] == ["3"]


def test_clauses_combine_with_and():
    f = EventFilter(end=utc(2014, 5, 4, 6, 0), hashtags=frozenset({"mainarena", "other"}))
    kept = list(apply_filter(_stream(), f))
    assert [m.id for m in kept] == ["1", "2"]


def test_filter_output_is_an_ordered_subsequence():
    stream = _stream()
    kept = list(apply_filter(stream, EventFilter(hashtags=frozenset({"mainarena"}))))
    it = iter(stream)
    assert all(any(m is x for x in it) for m in kept)


def test_filter_validation():
    with pytest.raises(ValueError):
        EventFilter(start=utc(2014, 5, 4, 6), end=utc(2014, 5, 4, 6))
    with pytest.raises(ValueError):
        BoundingBox(1.0, 0.0, 0.0, 5.0)
