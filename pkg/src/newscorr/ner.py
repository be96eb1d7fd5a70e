"""Person-mention extraction and name normalization.

Two extraction modes over cleaned articles:

* gazetteer — match only names (and their aliases) from a provided list;
* heuristic — maximal runs of 1-4 capitalized tokens, with sentence-initial
  single tokens dropped when the same token appears lowercased elsewhere in
  the article.

Matching is case-sensitive and scans title then body, left to right,
longest match first, never overlapping. Offsets index into
``article.text`` (title + "\\n" + body).

Name variants ("Donald Trump" vs "Trump") are folded by an AliasTable:
a multi-token surface is grouped with the bare last token whenever that
token also occurs on its own in the corpus, and the short form becomes the
canonical name. Two multi-token names sharing a last token all collapse
onto it — a deliberate, measure-level conflation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from datetime import date
from typing import Iterable, Iterator, Mapping, Sequence, TextIO

from .corpus import ArticleRecord, token_spans, tokens
from .dates import parse_date
from .errors import EmptyInput

MAX_NAME_TOKENS = 4

# Common mis-extractions: weekday/month names and agency words. Fully
# overridable via a stoplist file.
DEFAULT_STOPLIST = frozenset(
    {
        "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday",
        "January", "February", "March", "April", "May", "June", "July",
        "August", "September", "October", "November", "December",
        "Reuters", "Thomson Reuters", "Reuters Staff", "Bloomberg", "Associated Press",
        "AP", "AFP", "DPA", "Staff",
    }
)


@dataclass(frozen=True)
class MentionEvent:
    """One occurrence of a person name in one article."""

    article_id: str
    date: date
    surface: str
    canonical: str
    char_offset: int

    def to_dict(self) -> dict:
        return {
            "article_id": self.article_id,
            "date": self.date.isoformat(),
            "surface": self.surface,
            "canonical": self.canonical,
            "char_offset": self.char_offset,
        }


@dataclass(frozen=True)
class AliasTable:
    """Functional surface -> canonical mapping; canonicals map to themselves."""

    mapping: Mapping[str, str]
    stoplist: frozenset[str] = frozenset()

    def canonical(self, surface: str) -> str:
        return self.mapping.get(surface, surface)


@dataclass(frozen=True)
class Gazetteer:
    """Names to match, plus alias pairs pre-seeding the alias table."""

    names: frozenset[str]
    seed: Mapping[str, str]

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "Gazetteer":
        return cls(names=frozenset(names), seed={})


def load_gazetteer(path) -> Gazetteer:
    """Read a gazetteer file: one name per line, '#' comments allowed,
    optional "alias<TAB>canonical" lines pre-seed the alias table."""
    names: set[str] = set()
    seed: dict[str, str] = {}
    with open(path, encoding="utf-8") as fp:
        for line in fp:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "\t" in line:
                alias, canonical = line.split("\t", 1)
                alias, canonical = alias.strip(), canonical.strip()
                if alias and canonical:
                    seed[alias] = canonical
                    names.add(alias)
                    names.add(canonical)
            else:
                names.add(line)
    return Gazetteer(names=frozenset(names), seed=seed)


def load_stoplist(path) -> set[str]:
    """Read a stoplist file: one term per line, '#' comments allowed."""
    terms: set[str] = set()
    with open(path, encoding="utf-8") as fp:
        for line in fp:
            line = line.strip()
            if line and not line.startswith("#"):
                terms.add(line)
    return terms


def _segments(article: ArticleRecord) -> Iterator[tuple[str, int]]:
    # Title and body are scanned separately (a name never spans both) but
    # offsets index into the combined article.text.
    yield article.title, 0
    yield article.body, len(article.title) + 1


def _adjacent(text: str, prev_end: int, next_start: int) -> bool:
    # Tokens count as consecutive only when separated by pure whitespace;
    # intervening punctuation (sentence ends, commas) breaks a name.
    return all(ch.isspace() for ch in text[prev_end:next_start])


def _is_capitalized(token: str) -> bool:
    return bool(token) and token[0].isupper()


def _sentence_initial(text: str, start: int) -> bool:
    i = start - 1
    while i >= 0 and text[i].isspace():
        i -= 1
    return i < 0 or text[i] in ".!?"


def _match_gazetteer(
    text: str, base: int, gazetteer: Gazetteer, article: ArticleRecord
) -> Iterator[MentionEvent]:
    by_tokens = {}
    max_len = 1
    for name in gazetteer.names:
        toks = tuple(tokens(name))
        if toks:
            by_tokens[toks] = name
            max_len = max(max_len, len(toks))
    spans = list(token_spans(text))
    words = [text[s:e] for s, e in spans]
    i = 0
    while i < len(spans):
        matched = 0
        for length in range(min(max_len, len(spans) - i), 0, -1):
            if tuple(words[i : i + length]) not in by_tokens:
                continue
            if any(
                not _adjacent(text, spans[j][1], spans[j + 1][0])
                for j in range(i, i + length - 1)
            ):
                continue
            start, end = spans[i][0], spans[i + length - 1][1]
            surface = text[start:end]
            yield MentionEvent(article.id, article.date, surface, surface, base + start)
            matched = length
            break
        i += matched or 1


def _capitalized_runs(text: str) -> Iterator[list[tuple[int, int]]]:
    run: list[tuple[int, int]] = []
    for start, end in token_spans(text):
        token = text[start:end]
        if _is_capitalized(token) and (not run or _adjacent(text, run[-1][1], start)):
            run.append((start, end))
        else:
            if run:
                yield run
            run = [(start, end)] if _is_capitalized(token) else []
    if run:
        yield run


def _match_heuristic(
    text: str, base: int, article: ArticleRecord, lowercase_tokens: frozenset[str]
) -> Iterator[MentionEvent]:
    for run in _capitalized_runs(text):
        # Runs longer than MAX_NAME_TOKENS are chunked greedily.
        for i in range(0, len(run), MAX_NAME_TOKENS):
            chunk = run[i : i + MAX_NAME_TOKENS]
            start, end = chunk[0][0], chunk[-1][1]
            surface = text[start:end]
            if (
                len(chunk) == 1
                and _sentence_initial(text, start)
                and surface.lower() in lowercase_tokens
            ):
                continue
            yield MentionEvent(article.id, article.date, surface, surface, base + start)


def extract_mentions(
    article: ArticleRecord,
    gazetteer: Gazetteer | None = None,
    stoplist: frozenset[str] | set[str] = frozenset(),
) -> list[MentionEvent]:
    """Every non-overlapping person-name match in title then body.

    With a gazetteer, only its names match; otherwise the capitalization
    heuristic applies. Surfaces on the stoplist are dropped.
    """
    events: list[MentionEvent] = []
    if gazetteer is None:
        all_tokens = frozenset(tokens(article.text))
        lowercase = frozenset(t for t in all_tokens if t == t.lower())
        for text, base in _segments(article):
            events.extend(_match_heuristic(text, base, article, lowercase))
    else:
        for text, base in _segments(article):
            events.extend(_match_gazetteer(text, base, gazetteer, article))
    return [e for e in events if e.surface not in stoplist]


def build_alias_table(
    surfaces: Iterable[str],
    seed: Mapping[str, str] | None = None,
    stoplist: Iterable[str] = (),
) -> AliasTable:
    """Group name variants observed in a corpus.

    A multi-token surface maps to its bare last token when that token also
    occurs as a surface of its own; otherwise it stays its own canonical.
    Seeded alias pairs win over the grouping rule.
    """
    observed = set(surfaces)
    if not observed:
        raise EmptyInput("no surfaces to build an alias table from")

    mapping: dict[str, str] = {}
    if seed:
        for alias, canonical in seed.items():
            mapping[alias] = canonical
        for canonical in set(seed.values()):
            mapping[canonical] = canonical

    singles = {s for s in observed if len(list(tokens(s))) == 1}
    for surface in sorted(observed):
        if surface in mapping:
            continue
        toks = list(tokens(surface))
        if len(toks) > 1 and toks[-1] in singles:
            mapping[surface] = toks[-1]
        else:
            mapping[surface] = surface
    return AliasTable(mapping=mapping, stoplist=frozenset(stoplist))


def normalize(event: MentionEvent, table: AliasTable) -> MentionEvent:
    """Set the canonical name; unknown surfaces map to themselves."""
    return replace(event, canonical=table.canonical(event.surface))


def extract_corpus_mentions(
    articles: Iterable[ArticleRecord],
    gazetteer: Gazetteer | None = None,
    stoplist: frozenset[str] | set[str] = DEFAULT_STOPLIST,
) -> tuple[list[MentionEvent], AliasTable]:
    """Full pipeline over a corpus: extract, build the alias table,
    normalize, and drop events whose canonical is stoplisted."""
    raw: list[MentionEvent] = []
    for article in articles:
        raw.extend(extract_mentions(article, gazetteer, stoplist))
    return normalize_mentions(raw, gazetteer, stoplist)


def normalize_mentions(
    raw: Sequence[MentionEvent],
    gazetteer: Gazetteer | None = None,
    stoplist: frozenset[str] | set[str] = DEFAULT_STOPLIST,
) -> tuple[list[MentionEvent], AliasTable]:
    if not raw:
        return [], AliasTable(mapping={}, stoplist=frozenset(stoplist))
    table = build_alias_table(
        (e.surface for e in raw),
        seed=gazetteer.seed if gazetteer else None,
        stoplist=stoplist,
    )
    events = [normalize(e, table) for e in raw]
    return [e for e in events if e.canonical not in table.stoplist], table


def write_mentions_jsonl(events: Iterable[MentionEvent], fp: TextIO) -> None:
    for event in events:
        fp.write(json.dumps(event.to_dict(), ensure_ascii=False) + "\n")


def read_mentions_jsonl(fp: TextIO) -> list[MentionEvent]:
    """Import externally produced mentions: {article_id, date, surface} per
    line; canonical and char_offset are optional."""
    events = []
    for line in fp:
        line = line.strip()
        if not line:
            continue
        rec = json.loads(line)
        surface = str(rec["surface"])
        events.append(
            MentionEvent(
                article_id=str(rec["article_id"]),
                date=parse_date(rec["date"]),
                surface=surface,
                canonical=str(rec.get("canonical", surface)),
                char_offset=int(rec.get("char_offset", 0)),
            )
        )
    return events
