"""Article records and corpus cleaning.

Raw articles arrive as JSONL records with fields {id, date, title, body,
source?, language?}. Cleaning strips boilerplate spans such as
"(Reporting by ...)" credits via a configurable regex list, then
whitespace-normalizes title and body. Records with unparseable dates or
bodies that end up empty are rejected, never stored.
"""

from __future__ import annotations

import re
import sys
import unicodedata
from dataclasses import dataclass
from datetime import date
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .dates import parse_date
from .errors import EmptyBody, MalformedDate

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

# Boilerplate spans removed from bodies by default. Overridable through the
# `cleaning.patterns` key of a TOML config file; matched spans are replaced
# by a single space before whitespace normalization.
DEFAULT_CLEANING_PATTERNS = (
    r"\((?:Additional |Further )?[Rr]eporting by[^()]*\)",
    r"\([Ee]diting by[^()]*\)",
    r"\([Ww]riting by[^()]*\)",
    r"\([Cc]ompiled by[^()]*\)",
    r"Our Standards:(?s:.*)\Z",
)


@dataclass(frozen=True)
class ArticleRecord:
    """One cleaned news article."""

    id: str
    date: date
    title: str
    body: str
    source: str = ""
    language: str = "xx"

    @property
    def text(self) -> str:
        """Title and body as one scannable string; mention offsets index into this."""
        return f"{self.title}\n{self.body}"


@dataclass(frozen=True)
class CorpusStats:
    article_count: int
    date_min: date | None
    date_max: date | None
    vocab_size: int

    def to_dict(self) -> dict:
        return {
            "article_count": self.article_count,
            "date_min": self.date_min.isoformat() if self.date_min else None,
            "date_max": self.date_max.isoformat() if self.date_max else None,
            "vocab_size": self.vocab_size,
        }


@dataclass(frozen=True)
class CleaningConfig:
    patterns: tuple[str, ...] = DEFAULT_CLEANING_PATTERNS

    @classmethod
    def from_file(cls, path) -> "CleaningConfig":
        """Read `cleaning.patterns` (a list of regexes) from a TOML file."""
        with open(path, "rb") as fp:
            data = tomllib.load(fp)
        patterns = data.get("cleaning", {}).get("patterns")
        if patterns is None:
            return cls()
        return cls(patterns=tuple(str(p) for p in patterns))

    def compiled(self) -> tuple[re.Pattern, ...]:
        return tuple(re.compile(p, re.MULTILINE) for p in self.patterns)


_WS = re.compile(r"\s+")


def _normalize_ws(text: str) -> str:
    return _WS.sub(" ", text).strip()


def clean_article(raw: Mapping, config: CleaningConfig | None = None) -> ArticleRecord:
    """Turn a raw record into a cleaned ArticleRecord.

    Raises MalformedDate for missing/unparseable dates and EmptyBody when
    nothing is left of the body after boilerplate removal.
    """
    config = config or CleaningConfig()
    article_id = str(raw["id"])
    date_raw = raw.get("date")
    if date_raw is None:
        raise MalformedDate(f"record {article_id!r} has no date")
    day = parse_date(date_raw)

    body = str(raw.get("body") or "")
    for pattern in config.compiled():
        body = pattern.sub(" ", body)
    body = _normalize_ws(body)
    if not body:
        raise EmptyBody(f"record {article_id!r} has an empty body after cleaning")

    return ArticleRecord(
        id=article_id,
        date=day,
        title=_normalize_ws(str(raw.get("title") or "")),
        body=body,
        source=str(raw.get("source") or ""),
        language=str(raw.get("language") or "xx"),
    )


@lru_cache(maxsize=4096)
def _is_delimiter(ch: str) -> bool:
    return ch.isspace() or unicodedata.category(ch).startswith("P")


def token_spans(text: str) -> Iterator[tuple[int, int]]:
    """Yield (start, end) spans of maximal runs of non-whitespace,
    non-punctuation characters (Unicode categories)."""
    start = None
    for i, ch in enumerate(text):
        if _is_delimiter(ch):
            if start is not None:
                yield start, i
                start = None
        elif start is None:
            start = i
    if start is not None:
        yield start, len(text)


def tokens(text: str) -> Iterator[str]:
    for start, end in token_spans(text):
        yield text[start:end]


def compute_stats(articles: Iterable[ArticleRecord]) -> CorpusStats:
    """Counts, date span and vocabulary size over a set of cleaned articles.

    The vocabulary is the set of distinct case-sensitive tokens over
    title+body.
    """
    count = 0
    date_min: date | None = None
    date_max: date | None = None
    vocab: set[str] = set()
    for article in articles:
        count += 1
        if date_min is None or article.date < date_min:
            date_min = article.date
        if date_max is None or article.date > date_max:
            date_max = article.date
        vocab.update(tokens(article.title))
        vocab.update(tokens(article.body))
    return CorpusStats(count, date_min, date_max, len(vocab))
