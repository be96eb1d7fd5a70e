from datetime import date

import pytest
from hypothesis import given, strategies as st

from newscorr.corpus import (
    ArticleRecord,
    CleaningConfig,
    clean_article,
    compute_stats,
    tokens,
)
from newscorr.errors import EmptyBody, MalformedDate


def raw(body="x", **kw):
    rec = {"id": "a1", "date": "2016-11-08", "title": "t", "body": body}
    rec.update(kw)
    return rec


def test_removes_reporting_credit():
    record = clean_article(raw("Trump spoke. (Reporting by A. Smith; Editing by B. Jones)"))
    assert record.body == "Trump spoke."


def test_removes_trailing_standards_block():
    record = clean_article(raw("Talks continue.\nOur Standards: The Trust Principles.\nmore"))
    assert record.body == "Talks continue."


def test_no_boilerplate_is_identity():
    body = "Markets rose sharply on Monday."
    assert clean_article(raw(body)).body == body


def test_date_passthrough():
    assert clean_article(raw()).date == date(2016, 11, 8)


def test_datetime_discards_time_part():
    assert clean_article(raw(date="2016-11-08T14:30:00Z")).date == date(2016, 11, 8)


def test_malformed_date():
    with pytest.raises(MalformedDate):
        clean_article(raw(date="not-a-date"))
    with pytest.raises(MalformedDate):
        clean_article(raw(date=None))


def test_empty_body_after_cleaning():
    with pytest.raises(EmptyBody):
        clean_article(raw("(Reporting by A. Smith)"))
    with pytest.raises(EmptyBody):
        clean_article(raw("   "))


def test_whitespace_normalized():
    record = clean_article(raw("a \t b\n\nc", title="  two\t words "))
    assert record.body == "a b c"
    assert record.title == "two words"


def test_custom_patterns(tmp_path):
    cfg = tmp_path / "clean.toml"
    cfg.write_text('[cleaning]\npatterns = ["FOO+"]\n', encoding="utf-8")
    config = CleaningConfig.from_file(cfg)
    assert clean_article(raw("xFOOOy ok"), config).body == "x y ok"
    # defaults no longer apply under a custom list
    kept = clean_article(raw("z (Editing by E)"), config)
    assert "(Editing by E)" in kept.body


def test_config_without_key_uses_defaults(tmp_path):
    cfg = tmp_path / "clean.toml"
    cfg.write_text("[other]\nx = 1\n", encoding="utf-8")
    assert CleaningConfig.from_file(cfg).patterns == CleaningConfig().patterns


clean_text = st.text(
    alphabet=st.characters(blacklist_categories=("Cs",), blacklist_characters="\x00"),
    max_size=200,
)


@given(body=clean_text, title=clean_text)
def test_clean_is_idempotent(body, title):
    try:
        once = clean_article(raw(body, title=title))
    except EmptyBody:
        return
    twice = clean_article(
        {"id": once.id, "date": once.date.isoformat(), "title": once.title, "body": once.body}
    )
    assert twice.body == once.body
    assert twice.title == once.title


def test_tokens_split_on_punctuation_and_whitespace():
    assert list(tokens("Trump's car, fast!")) == ["Trump", "s", "car", "fast"]
    assert list(tokens("")) == []
    assert list(tokens("  ,,  ")) == []


def test_stats_over_articles():
    records = [
        ArticleRecord("a", date(2017, 1, 1), "Alpha beta", "beta gamma."),
        ArticleRecord("b", date(2017, 3, 1), "", "Alpha ALPHA"),
    ]
    stats = compute_stats(records)
    assert stats.article_count == 2
    assert (stats.date_min, stats.date_max) == (date(2017, 1, 1), date(2017, 3, 1))
    # case-sensitive vocabulary: Alpha, beta, gamma, ALPHA
    assert stats.vocab_size == 4


def test_stats_empty():
    stats = compute_stats([])
    assert stats.article_count == 0
    assert stats.date_min is None and stats.date_max is None
    assert stats.vocab_size == 0
