"""Shared test utilities: independent oracles and index builders.

The oracles here deliberately take a different computational path from the
engine (mean-centered two-pass float evaluation vs. exact integer sums),
so agreement is meaningful.
"""

from __future__ import annotations

import math
from datetime import date, timedelta

from newscorr.timeseries import PersonSeries, SeriesIndex


def naive_pearson(x, y):
    """Mean-centered two-pass Pearson; None on zero variance."""
    n = len(x)
    mx = sum(x) / n
    my = sum(y) / n
    vx = sum((v - mx) ** 2 for v in x)
    vy = sum((v - my) ** 2 for v in y)
    if vx == 0 or vy == 0:
        return None
    cov = sum((a - mx) * (b - my) for a, b in zip(x, y))
    return cov / math.sqrt(vx * vy)


def naive_cosine(x, y):
    nx = math.sqrt(sum(v * v for v in x))
    ny = math.sqrt(sum(v * v for v in y))
    if nx == 0 or ny == 0:
        return None
    return sum(a * b for a, b in zip(x, y)) / (nx * ny)


def index_from_counts(counts: dict[str, list[int]], start=date(2017, 1, 1)) -> SeriesIndex:
    days = {len(v) for v in counts.values()}
    assert len(days) == 1, "all count lists must have equal length"
    length = days.pop()
    end = start + timedelta(days=length - 1)
    series = {
        person: PersonSeries(person, start, tuple(values))
        for person, values in counts.items()
    }
    return SeriesIndex(start, end, series)
