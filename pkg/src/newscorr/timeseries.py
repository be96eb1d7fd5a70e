"""Zero-filled daily mention-count series and windowed views.

A window with end date t and length n covers the days [t-n+1, t],
inclusive; every module shares this convention. Counts stay integers all
the way to correlation time, so rolling sums are exact (no float drift).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, replace
from datetime import date, timedelta
from typing import Iterable, Mapping, Sequence, TextIO

from .dates import day_range, num_days
from .errors import EmptyRange, OutOfRange, TooShort, UnknownPerson
from .ner import MentionEvent

COUNT_MODES = ("occurrence", "article")


@dataclass(frozen=True)
class PersonSeries:
    """Daily mention counts for one canonical person, no gaps."""

    person: str
    start_date: date
    counts: tuple[int, ...]

    @property
    def end_date(self) -> date:
        return self.start_date + timedelta(days=len(self.counts) - 1)

    def window(self, end_date: date, n: int) -> tuple[int, ...]:
        return self.slice(end_date - timedelta(days=n - 1), end_date)

    def slice(self, start: date, end: date) -> tuple[int, ...]:
        if start < self.start_date or end > self.end_date or start > end:
            raise OutOfRange(
                f"[{start}, {end}] outside series range "
                f"[{self.start_date}, {self.end_date}]"
            )
        i = (start - self.start_date).days
        return self.counts[i : i + num_days(start, end)]


@dataclass(frozen=True)
class WindowSpec:
    """Time parameter of the similarity measure: trailing n-day window."""

    end_date: date
    n: int
    method: str = "pearson"

    def __post_init__(self):
        if self.method not in ("pearson", "cosine"):
            raise ValueError(f"unknown method {self.method!r}")
        minimum = 2 if self.method == "pearson" else 1
        if self.n < minimum:
            raise TooShort(f"window length {self.n} < {minimum} for {self.method}")

    @property
    def start_date(self) -> date:
        return self.end_date - timedelta(days=self.n - 1)


@dataclass(frozen=True)
class RollingStats:
    """Window sums for one series (x) or a tracked pair (x, y).

    Sliding subtracts the leaving terms and adds the entering ones; with
    integer inputs every sum stays exactly equal to a from-scratch
    recomputation.
    """

    n: int
    sum_x: int | float
    sum_xx: int | float
    sum_y: int | float = 0
    sum_yy: int | float = 0
    sum_xy: int | float = 0

    @classmethod
    def from_window(
        cls, x: Sequence[int], y: Sequence[int] | None = None
    ) -> "RollingStats":
        xs = [int(v) for v in x]
        if y is None:
            return cls(len(xs), sum(xs), sum(v * v for v in xs))
        ys = [int(v) for v in y]
        if len(ys) != len(xs):
            raise ValueError("x and y windows differ in length")
        return cls(
            n=len(xs),
            sum_x=sum(xs),
            sum_xx=sum(v * v for v in xs),
            sum_y=sum(ys),
            sum_yy=sum(v * v for v in ys),
            sum_xy=sum(a * b for a, b in zip(xs, ys)),
        )

    def slide(
        self,
        leaving: int,
        entering: int,
        leaving_y: int | None = None,
        entering_y: int | None = None,
    ) -> "RollingStats":
        out = replace(
            self,
            sum_x=self.sum_x - leaving + entering,
            sum_xx=self.sum_xx - leaving * leaving + entering * entering,
        )
        if leaving_y is None and entering_y is None:
            return out
        if leaving_y is None or entering_y is None:
            raise ValueError("pair slide needs both leaving_y and entering_y")
        return replace(
            out,
            sum_y=self.sum_y - leaving_y + entering_y,
            sum_yy=self.sum_yy - leaving_y * leaving_y + entering_y * entering_y,
            sum_xy=self.sum_xy - leaving * leaving_y + entering * entering_y,
        )


def slide(
    stats: RollingStats,
    leaving: int,
    entering: int,
    leaving_y: int | None = None,
    entering_y: int | None = None,
) -> RollingStats:
    return stats.slide(leaving, entering, leaving_y, entering_y)


def build_daily_counts(
    events: Iterable[MentionEvent],
    start: date,
    end: date,
    count_mode: str = "occurrence",
) -> dict[str, PersonSeries]:
    """One zero-filled series per canonical person over [start, end].

    count_mode "occurrence" counts every mention; "article" counts each
    (article, person) pair once.
    """
    if end < start:
        raise EmptyRange(f"empty date range [{start}, {end}]")
    if count_mode not in COUNT_MODES:
        raise ValueError(f"unknown count mode {count_mode!r}")

    events = list(events)
    if count_mode == "article":
        seen: set[tuple[str, str]] = set()
        deduped = []
        for e in events:
            key = (e.article_id, e.canonical)
            if key not in seen:
                seen.add(key)
                deduped.append(e)
        events = deduped

    days = num_days(start, end)
    counts: dict[str, list[int]] = {}
    for e in events:
        if not (start <= e.date <= end):
            raise OutOfRange(f"event on {e.date} outside range [{start}, {end}]")
        row = counts.setdefault(e.canonical, [0] * days)
        row[(e.date - start).days] += 1
    return {
        person: PersonSeries(person, start, tuple(row))
        for person, row in counts.items()
    }


def window_view(series: PersonSeries, w: WindowSpec) -> tuple[int, ...]:
    """The n daily counts ending at and including w.end_date."""
    if w.start_date < series.start_date or w.end_date > series.end_date:
        raise OutOfRange(
            f"window [{w.start_date}, {w.end_date}] outside series range "
            f"[{series.start_date}, {series.end_date}]"
        )
    return series.slice(w.start_date, w.end_date)


class SeriesIndex:
    """Immutable per-person series store over one corpus date range."""

    def __init__(self, start: date, end: date, series: Mapping[str, PersonSeries]):
        if end < start:
            raise EmptyRange(f"empty date range [{start}, {end}]")
        self.start_date = start
        self.end_date = end
        self._series = dict(series)

    @classmethod
    def from_events(
        cls,
        events: Iterable[MentionEvent],
        start: date,
        end: date,
        count_mode: str = "occurrence",
    ) -> "SeriesIndex":
        return cls(start, end, build_daily_counts(events, start, end, count_mode))

    def persons(self) -> list[str]:
        return sorted(self._series)

    def __contains__(self, person: str) -> bool:
        return person in self._series

    def __len__(self) -> int:
        return len(self._series)

    def series(self, person: str) -> PersonSeries:
        try:
            return self._series[person]
        except KeyError:
            raise UnknownPerson(person) from None

    def window(self, person: str, w: WindowSpec) -> tuple[int, ...]:
        return window_view(self.series(person), w)

    def check_range(self, start: date, end: date) -> None:
        if start > end:
            raise EmptyRange(f"empty date range [{start}, {end}]")
        if start < self.start_date or end > self.end_date:
            raise OutOfRange(
                f"[{start}, {end}] outside corpus range "
                f"[{self.start_date}, {self.end_date}]"
            )

    def totals(self, start: date | None = None, end: date | None = None) -> dict[str, int]:
        start = start or self.start_date
        end = end or self.end_date
        self.check_range(start, end)
        return {
            person: sum(s.slice(start, end)) for person, s in self._series.items()
        }

    def top_k(
        self, k: int, start: date | None = None, end: date | None = None
    ) -> list[tuple[str, int]]:
        """Persons by total mentions, descending; ties break by name."""
        ranked = sorted(self.totals(start, end).items(), key=lambda kv: (-kv[1], kv[0]))
        return ranked[: max(k, 0)]


def top_k(
    index: SeriesIndex, k: int, start: date | None = None, end: date | None = None
) -> list[tuple[str, int]]:
    return index.top_k(k, start, end)


def rank_frequency_slope(totals: Sequence[int]) -> float:
    """Least-squares slope of log(count) against log(rank).

    Input must be sorted descending; zero counts are excluded (their log is
    undefined). Near -1 for Zipf-like corpora.
    """
    pairs = [(r, c) for r, c in enumerate(totals, start=1) if c > 0]
    if len(pairs) < 2:
        raise TooShort("need at least two positive counts to fit a slope")
    logs = [(math.log(r), math.log(c)) for r, c in pairs]
    mean_x = sum(x for x, _ in logs) / len(logs)
    mean_y = sum(y for _, y in logs) / len(logs)
    sxx = sum((x - mean_x) ** 2 for x, _ in logs)
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in logs)
    return sxy / sxx


def write_series_csv(
    index: SeriesIndex,
    fp: TextIO,
    persons: Sequence[str] | None = None,
    start: date | None = None,
    end: date | None = None,
) -> None:
    """Export zero-filled rows: date,person,count for every day in range."""
    persons = list(persons) if persons is not None else index.persons()
    start = start or index.start_date
    end = end or index.end_date
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(["date", "person", "count"])
    for person in persons:
        values = index.series(person).slice(start, end)
        for day, count in zip(day_range(start, end), values):
            writer.writerow([day.isoformat(), person, count])
