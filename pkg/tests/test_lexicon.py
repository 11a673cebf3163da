import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crowdmon import (
    EmptyLexiconError,
    EmotionVector,
    Lexicon,
    MalformedLineError,
    load_lexicon,
)


def write(tmp_path, text, name="lex.tsv"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_multi_emotion_entries_merge_into_one_vector(tmp_path):
    path = write(tmp_path, "fear\tscream\t0.9\nsadness\tscream\t0.1\n")
    lex = load_lexicon(path)
    assert len(lex) == 1
    assert lex.vector("scream") == EmotionVector(0, 0.9, 0, 0.1)


def test_only_non_model_emotions_is_empty(tmp_path):
    path = write(tmp_path, "surprise\tgasp\t1.2\n")
    with pytest.raises(EmptyLexiconError):
        load_lexicon(path)


def test_words_lowercased_on_load(tmp_path):
    lex = load_lexicon(write(tmp_path, "anger\tFURY\t0.5\n"))
    assert lex.vector("fury") == EmotionVector(0.5, 0, 0, 0)
    assert lex.vector("FURY") == EmotionVector()


def test_joy_is_an_alias_for_happiness(tmp_path):
    lex = load_lexicon(write(tmp_path, "joy\tparty\t0.7\nhappiness\tparty\t0.3\n"))
    assert lex.vector("party") == EmotionVector(happiness=1.0)


def test_non_model_emotions_dropped_but_rest_kept(tmp_path):
    lex = load_lexicon(write(tmp_path, "disgust\tyuck\t0.8\nfear\tyuck\t0.2\n"))
    assert lex.vector("yuck") == EmotionVector(fear=0.2)


def test_negative_scores_clamp_to_zero_and_count(tmp_path):
    lex = load_lexicon(write(tmp_path, "anger\tmeh\t-0.4\nfear\tjolt\t0.6\n"))
    assert lex.vector("meh") == EmotionVector()
    assert lex.clamped_negative == 1


def test_comments_and_blank_lines_skipped(tmp_path):
    lex = load_lexicon(write(tmp_path, "# header\n\nanger\tfury\t0.5\n"))
    assert len(lex) == 1


def test_crlf_line_endings_accepted(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_bytes(b"anger\tfury\t0.5\r\nfear\tscream\t0.9\r\n")
    lex = load_lexicon(path)
    assert lex.vector("scream") == EmotionVector(fear=0.9)


@pytest.mark.parametrize(
    "bad_line",
    [
        "anger\tfury",  # too few fields
        "anger\tfury\t0.5\textra",  # too many fields
        "anger\tfury\tnotanumber",
        "anger\tfury\tnan",
        "anger\tfury\tinf",
        "anger\ttwo words\t0.5",
        "anger\t\t0.5",  # empty word
    ],
)
def test_malformed_lines_abort_with_line_number(tmp_path, bad_line):
    path = write(tmp_path, "fear\tscream\t0.9\n" + bad_line + "\n")
    with pytest.raises(MalformedLineError) as exc_info:
        load_lexicon(path)
    assert exc_info.value.line_no == 2


def test_missing_file_raises_file_not_found(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_lexicon(tmp_path / "nope.tsv")


def test_lookup_is_total():
    lex = Lexicon({"fury": EmotionVector(anger=0.5)})
    assert lex.vector("zzzunknown") == EmotionVector()
    assert lex.vector("") == EmotionVector()


def test_lexicon_rejects_bad_keys():
    with pytest.raises(ValueError):
        Lexicon({"Fury": EmotionVector(anger=0.5)})
    with pytest.raises(ValueError):
        Lexicon({"two words": EmotionVector(anger=0.5)})
    with pytest.raises(ValueError):
        Lexicon({"": EmotionVector(anger=0.5)})


LINES = [
    "anger\tfury\t0.5",
    "anger\tfury\t0.25",
    "fear\tfury\t0.1",
    "fear\tscream\t0.9",
    "sadness\tscream\t0.1",
    "joy\tparty\t0.7",
    "surprise\tgasp\t1.2",
    "anger\tmeh\t-0.4",
]


@given(st.permutations(LINES))
def test_line_order_never_matters(tmp_path_factory, permuted):
    tmp = tmp_path_factory.mktemp("perm")
    base = load_lexicon(write(tmp, "\n".join(LINES) + "\n", name="a.tsv"))
    shuffled = load_lexicon(write(tmp, "\n".join(permuted) + "\n", name="b.tsv"))
    assert base == shuffled


def test_same_bytes_same_lexicon(tmp_path):
    text = "\n".join(LINES) + "\n"
    a = load_lexicon(write(tmp_path, text, name="a.tsv"))
    b = load_lexicon(write(tmp_path, text, name="b.tsv"))
    assert a == b


def test_all_loaded_vectors_non_negative_and_finite(tmp_path):
    rng = random.Random(7)
    lines = [
        f"{rng.choice(['anger', 'fear', 'joy', 'sadness', 'trust'])}\tw{i}\t{rng.uniform(-1, 3)}"
        for i in range(200)
    ]
    lex = load_lexicon(write(tmp_path, "\n".join(lines) + "\n"))
    for word in lex.words():
        assert all(w >= 0 for w in lex.vector(word).as_tuple())
