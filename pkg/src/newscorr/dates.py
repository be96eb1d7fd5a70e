"""Calendar-date helpers. Everything downstream works at day precision."""

from __future__ import annotations

from datetime import date, datetime, timedelta
from typing import Iterator

from .errors import MalformedDate


def parse_date(value: str) -> date:
    """Parse an ISO-8601 date or datetime string; any time part is discarded."""
    if not isinstance(value, str):
        raise MalformedDate(f"not a date string: {value!r}")
    s = value.strip()
    try:
        return date.fromisoformat(s)
    except ValueError:
        pass
    try:
        return datetime.fromisoformat(s.replace("Z", "+00:00")).date()
    except ValueError:
        raise MalformedDate(f"not an ISO-8601 date: {value!r}") from None


def num_days(start: date, end: date) -> int:
    """Days in the inclusive interval [start, end]."""
    return (end - start).days + 1


def day_range(start: date, end: date) -> Iterator[date]:
    """Yield every day of the inclusive interval [start, end]."""
    d = start
    while d <= end:
        yield d
        d += timedelta(days=1)
