"""Embedded single-file corpus store (SQLite) and JSONL ingestion.

Articles and extracted mentions live in one database file. Ingestion is
idempotent: duplicate article ids are skipped (first write wins), so
re-ingesting the same file leaves the corpus unchanged. After ingestion
the store is effectively read-only and safe to share across readers.
"""

from __future__ import annotations

import json
import logging
import sqlite3
from dataclasses import dataclass
from datetime import date
from typing import Iterable, Iterator, TextIO

from .corpus import ArticleRecord, CleaningConfig, CorpusStats, clean_article, compute_stats
from .errors import FormatError, NewscorrError
from .ner import MentionEvent

log = logging.getLogger(__name__)

_SCHEMA = """
CREATE TABLE IF NOT EXISTS articles (
    id       TEXT PRIMARY KEY,
    date     TEXT NOT NULL,
    title    TEXT NOT NULL,
    body     TEXT NOT NULL,
    source   TEXT NOT NULL,
    language TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS mentions (
    article_id  TEXT NOT NULL,
    date        TEXT NOT NULL,
    surface     TEXT NOT NULL,
    canonical   TEXT NOT NULL,
    char_offset INTEGER NOT NULL
);
CREATE INDEX IF NOT EXISTS mentions_by_person ON mentions (canonical, date);
"""


@dataclass(frozen=True)
class IngestReport:
    stats: CorpusStats
    added: int
    skipped: int

    def to_dict(self) -> dict:
        return {**self.stats.to_dict(), "added": self.added, "skipped": self.skipped}


class CorpusStore:
    def __init__(self, path):
        self._conn = sqlite3.connect(str(path))
        self._conn.executescript(_SCHEMA)

    def close(self) -> None:
        self._conn.close()

    def __enter__(self) -> "CorpusStore":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    # -- articles ----------------------------------------------------------

    def add_article(self, record: ArticleRecord) -> bool:
        """Store a record; False when the id already exists (first write wins)."""
        cur = self._conn.execute(
            "INSERT OR IGNORE INTO articles VALUES (?, ?, ?, ?, ?, ?)",
            (
                record.id,
                record.date.isoformat(),
                record.title,
                record.body,
                record.source,
                record.language,
            ),
        )
        self._conn.commit()
        return cur.rowcount == 1

    def get_article(self, article_id: str) -> ArticleRecord | None:
        row = self._conn.execute(
            "SELECT id, date, title, body, source, language FROM articles WHERE id = ?",
            (article_id,),
        ).fetchone()
        return self._row_to_article(row) if row else None

    def iter_articles(self) -> Iterator[ArticleRecord]:
        for row in self._conn.execute(
            "SELECT id, date, title, body, source, language "
            "FROM articles ORDER BY date, id"
        ):
            yield self._row_to_article(row)

    @staticmethod
    def _row_to_article(row) -> ArticleRecord:
        return ArticleRecord(
            id=row[0],
            date=date.fromisoformat(row[1]),
            title=row[2],
            body=row[3],
            source=row[4],
            language=row[5],
        )

    def article_count(self) -> int:
        return self._conn.execute("SELECT COUNT(*) FROM articles").fetchone()[0]

    def date_range(self) -> tuple[date, date] | None:
        row = self._conn.execute("SELECT MIN(date), MAX(date) FROM articles").fetchone()
        if row[0] is None:
            return None
        return date.fromisoformat(row[0]), date.fromisoformat(row[1])

    def stats(self) -> CorpusStats:
        return compute_stats(self.iter_articles())

    def export_articles_jsonl(self, fp: TextIO) -> int:
        count = 0
        for a in self.iter_articles():
            fp.write(
                json.dumps(
                    {
                        "id": a.id,
                        "date": a.date.isoformat(),
                        "title": a.title,
                        "body": a.body,
                        "source": a.source,
                        "language": a.language,
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )
            count += 1
        return count

    # -- mentions ----------------------------------------------------------

    def replace_mentions(self, events: Iterable[MentionEvent]) -> int:
        """Swap in a fresh extraction; returns the number of stored events."""
        cur = self._conn.cursor()
        cur.execute("DELETE FROM mentions")
        rows = [
            (e.article_id, e.date.isoformat(), e.surface, e.canonical, e.char_offset)
            for e in events
        ]
        cur.executemany("INSERT INTO mentions VALUES (?, ?, ?, ?, ?)", rows)
        self._conn.commit()
        return len(rows)

    def iter_mentions(self) -> Iterator[MentionEvent]:
        for row in self._conn.execute(
            "SELECT article_id, date, surface, canonical, char_offset "
            "FROM mentions ORDER BY date, article_id, char_offset"
        ):
            yield MentionEvent(
                article_id=row[0],
                date=date.fromisoformat(row[1]),
                surface=row[2],
                canonical=row[3],
                char_offset=row[4],
            )

    def mention_count(self) -> int:
        return self._conn.execute("SELECT COUNT(*) FROM mentions").fetchone()[0]

    def export_mentions_jsonl(self, fp: TextIO) -> int:
        count = 0
        for e in self.iter_mentions():
            fp.write(json.dumps(e.to_dict(), ensure_ascii=False) + "\n")
            count += 1
        return count


def ingest(
    path, store: CorpusStore, config: CleaningConfig | None = None
) -> IngestReport:
    """Clean and persist every parseable record of a JSONL file.

    Per-record failures (bad date, empty body, duplicate id, broken JSON
    line) are logged and counted as skipped, never fatal. A file where not
    a single line parses as a JSON object raises FormatError.
    """
    added = 0
    skipped = 0
    lines = 0
    parsed = 0
    with open(path, "rb") as fp:
        blob = fp.read()
    try:
        text = blob.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: not UTF-8 text: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        lines += 1
        try:
            raw = json.loads(line)
            if not isinstance(raw, dict):
                raise ValueError("record is not a JSON object")
        except ValueError as exc:
            skipped += 1
            log.warning("%s:%d: unparseable record: %s", path, lineno, exc)
            continue
        parsed += 1
        try:
            record = clean_article(raw, config)
        except (NewscorrError, KeyError, TypeError) as exc:
            skipped += 1
            log.warning("%s:%d: rejected record: %s", path, lineno, exc)
            continue
        if store.add_article(record):
            added += 1
        else:
            skipped += 1
            log.warning("%s:%d: duplicate id %r", path, lineno, record.id)
    if lines > 0 and parsed == 0:
        raise FormatError(f"{path}: no line parses as a JSON object")
    return IngestReport(stats=store.stats(), added=added, skipped=skipped)


def read_articles_jsonl(path, config: CleaningConfig | None = None) -> list[ArticleRecord]:
    """Parse and clean a JSONL corpus without persisting it."""
    records = []
    with open(path, encoding="utf-8") as fp:
        for line in fp:
            line = line.strip()
            if line:
                records.append(clean_article(json.loads(line), config))
    return records
