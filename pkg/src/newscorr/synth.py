"""Seeded synthetic corpora.

Generators for the two standard experiment fixtures:

* a regime-switch pair — two persons with independent daily counts for the
  first half of the range, identical counts for the second half, so their
  windowed correlation rises from about 0 to exactly 1;
* a Zipf corpus — person at rank i receives floor(total/i) mentions.

Everything is driven by an explicit seed and deterministic, so generated
corpora can be frozen as fixtures and regenerated bit-identically.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from datetime import date, timedelta

from .ner import MentionEvent

REGIME_PERSONS = ("Adler", "Berger")
REGIME_ALIASES = {"Jan Adler": "Adler", "Eva Berger": "Berger"}

# rank 1 gets the last name, so mention order and name order disagree
ZIPF_NAMES = (
    "Albrecht", "Brandt", "Claussen", "Dittmar", "Eckhart",
    "Fromm", "Gerlach", "Hartwig", "Ibsen", "Jessen",
    "Kroll", "Lindt", "Marquardt", "Nolte", "Ostheim",
    "Pabst", "Quandt", "Rehberg", "Sattler", "Tilman",
)

BOILERPLATE = " (Reporting by Alex Pine; Editing by Sam Rowe)"


@dataclass(frozen=True)
class RegimeSwitchCorpus:
    start: date
    switch: date
    articles: list[dict]
    counts: dict[str, list[int]]


def regime_switch_counts(
    seed: int, days: int = 360, switch: int = 180, high: int = 9
) -> tuple[list[int], list[int]]:
    rng = random.Random(seed)
    a = [rng.randint(0, high) for _ in range(days)]
    b = [rng.randint(0, high) for _ in range(switch)] + a[switch:]
    return a, b


def regime_switch_corpus(
    seed: int,
    start: date = date(2016, 1, 1),
    days: int = 360,
    switch: int = 180,
) -> RegimeSwitchCorpus:
    """One article per day mentioning the two persons with planted counts.

    Occasionally uses the long name form ("Jan Adler") and appends
    agency boilerplate, so the full clean/extract/normalize path is
    exercised without changing the planted counts.
    """
    person_a, person_b = REGIME_PERSONS
    a, b = regime_switch_counts(seed, days, switch)
    articles = []
    for i in range(days):
        day = start + timedelta(days=i)
        sentences = []
        for k in range(a[i]):
            surface = "Jan Adler" if k == 0 and i % 7 == 0 else person_a
            sentences.append(f"{surface} made remarks on the economy.")
        for k in range(b[i]):
            surface = "Eva Berger" if k == 0 and i % 11 == 0 else person_b
            sentences.append(f"{surface} addressed the press.")
        if not sentences:
            sentences.append("No notable appearances today.")
        body = " ".join(sentences)
        if i % 5 == 0:
            body += BOILERPLATE
        articles.append(
            {
                "id": f"art-{i:04d}",
                "date": day.isoformat(),
                "title": f"Daily briefing no. {i}",
                "body": body,
                "source": "synthetic.example",
                "language": "en",
            }
        )
    return RegimeSwitchCorpus(
        start=start,
        switch=start + timedelta(days=switch),
        articles=articles,
        counts={person_a: a, person_b: b},
    )


def zipf_totals(persons: int = 20, total: int = 1000) -> dict[str, int]:
    """Planted totals: rank-i person gets floor(total / i) mentions."""
    names = list(reversed(ZIPF_NAMES))[:persons]
    return {name: total // (i + 1) for i, name in enumerate(names)}


def zipf_corpus(
    persons: int = 20,
    days: int = 30,
    start: date = date(2017, 1, 1),
    total: int = 1000,
) -> tuple[list[dict], dict[str, int]]:
    """One article per day; each person's mentions spread round-robin."""
    totals = zipf_totals(persons, total)
    per_day = {name: [0] * days for name in totals}
    for name, count in totals.items():
        base, extra = divmod(count, days)
        for d in range(days):
            per_day[name][d] = base + (1 if d < extra else 0)
    articles = []
    for d in range(days):
        day = start + timedelta(days=d)
        sentences = []
        for name in totals:
            sentences.extend([f"{name} was mentioned."] * per_day[name][d])
        articles.append(
            {
                "id": f"zipf-{d:04d}",
                "date": day.isoformat(),
                "title": f"Coverage digest {d}",
                "body": " ".join(sentences) or "Quiet day.",
                "source": "synthetic.example",
                "language": "en",
            }
        )
    return articles, totals


def events_from_counts(
    person: str, counts: list[int], start: date, article_prefix: str = "art"
) -> list[MentionEvent]:
    """Mention events realizing a planted daily count series."""
    events = []
    for i, count in enumerate(counts):
        day = start + timedelta(days=i)
        for k in range(count):
            events.append(
                MentionEvent(
                    article_id=f"{article_prefix}-{i:04d}",
                    date=day,
                    surface=person,
                    canonical=person,
                    char_offset=k,
                )
            )
    return events


def write_jsonl(records: list[dict], path) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        for rec in records:
            fp.write(json.dumps(rec, ensure_ascii=False) + "\n")


def gazetteer_lines() -> list[str]:
    lines = ["# synthetic fixture gazetteer"]
    lines.extend(REGIME_PERSONS)
    lines.extend(f"{alias}\t{canonical}" for alias, canonical in REGIME_ALIASES.items())
    lines.extend(ZIPF_NAMES)
    return lines


def stoplist_lines() -> list[str]:
    return [
        "# terms wrongly matched as persons",
        "Reuters",
        "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday",
    ]
