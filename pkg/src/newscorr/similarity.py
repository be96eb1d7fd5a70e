"""Time-parameterized person-to-person similarity.

Primary measure: Pearson correlation of two persons' daily counts over a
trailing n-day window — chosen because it also captures co-movement of
series sitting on different absolute levels. Cosine similarity is kept as
the contrast mode (scale- but not shift-invariant).

A window with zero variance (Pearson) or zero norm (cosine) has no defined
similarity; that is UNDEFINED, carried as None and serialized as
null/empty — never as 0.

Sliding computations keep window sums as exact integers, so the rolling
path reproduces a from-scratch recomputation bit for bit.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from datetime import date, timedelta
from typing import Sequence, TextIO

import numpy as np

from .dates import day_range
from .errors import LengthMismatch, TooShort
from .timeseries import RollingStats, SeriesIndex, WindowSpec

METHODS = ("pearson", "cosine")


@dataclass(frozen=True)
class SimilarityValue:
    """A single similarity, tagged with the window that parameterizes it."""

    value: float | None
    method: str
    window: WindowSpec

    @property
    def defined(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class CorrelationSeries:
    person_a: str
    person_b: str
    n: int
    method: str
    points: tuple[tuple[date, float | None], ...]


@dataclass(frozen=True)
class SimilarityMatrix:
    persons: tuple[str, ...]
    values: tuple[tuple[float | None, ...], ...]
    window: WindowSpec | None = None

    def rounded(self, ndigits: int = 2) -> "SimilarityMatrix":
        return SimilarityMatrix(
            persons=self.persons,
            values=tuple(
                tuple(None if v is None else round(v, ndigits) for v in row)
                for row in self.values
            ),
            window=self.window,
        )


def _clamp(r: float) -> float:
    # absorbs last-ulp overshoot beyond the mathematical bounds
    return max(-1.0, min(1.0, r))


def _coerce(values: Sequence) -> tuple[list, bool]:
    out: list = []
    integral = True
    for v in values:
        if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
            out.append(int(v))
        else:
            out.append(float(v))
            integral = False
    return out, integral


def pearson_from_sums(
    n: int,
    sum_x: int | float,
    sum_xx: int | float,
    sum_y: int | float,
    sum_yy: int | float,
    sum_xy: int | float,
) -> float | None:
    num = n * sum_xy - sum_x * sum_y
    dx = n * sum_xx - sum_x * sum_x
    dy = n * sum_yy - sum_y * sum_y
    if dx <= 0 or dy <= 0:
        return None
    return _clamp(num / math.sqrt(dx * dy))


def cosine_from_sums(
    sum_xx: int | float, sum_yy: int | float, sum_xy: int | float
) -> float | None:
    if sum_xx <= 0 or sum_yy <= 0:
        return None
    return _clamp(sum_xy / math.sqrt(sum_xx * sum_yy))


def pearson_from_stats(stats: RollingStats) -> float | None:
    return pearson_from_sums(
        stats.n, stats.sum_x, stats.sum_xx, stats.sum_y, stats.sum_yy, stats.sum_xy
    )


def pearson(x: Sequence, y: Sequence) -> float | None:
    """Pearson correlation coefficient of two equal-length vectors.

    None (UNDEFINED) when either vector has zero variance. Integer inputs
    go through exact integer sums; float inputs through a mean-centered
    two-pass evaluation of the same quantity.
    """
    if len(x) != len(y):
        raise LengthMismatch(f"|x| = {len(x)} vs |y| = {len(y)}")
    n = len(x)
    if n < 2:
        raise TooShort(f"pearson needs n >= 2, got {n}")
    xs, x_int = _coerce(x)
    ys, y_int = _coerce(y)
    if min(xs) == max(xs) or min(ys) == max(ys):
        return None
    if x_int and y_int:
        return pearson_from_sums(
            n,
            sum(xs),
            sum(v * v for v in xs),
            sum(ys),
            sum(v * v for v in ys),
            sum(a * b for a, b in zip(xs, ys)),
        )
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    dxs = [v - mx for v in xs]
    dys = [v - my for v in ys]
    vx = math.fsum(v * v for v in dxs)
    vy = math.fsum(v * v for v in dys)
    if vx <= 0 or vy <= 0:
        return None
    cov = math.fsum(a * b for a, b in zip(dxs, dys))
    return _clamp(cov / math.sqrt(vx * vy))


def cosine(x: Sequence, y: Sequence) -> float | None:
    """Cosine similarity; None (UNDEFINED) when either vector is all zero."""
    if len(x) != len(y):
        raise LengthMismatch(f"|x| = {len(x)} vs |y| = {len(y)}")
    if len(x) < 1:
        raise TooShort("cosine needs n >= 1")
    xs, _ = _coerce(x)
    ys, _ = _coerce(y)
    if all(v == 0 for v in xs) or all(v == 0 for v in ys):
        return None
    sxx = math.fsum(v * v for v in xs)
    syy = math.fsum(v * v for v in ys)
    sxy = math.fsum(a * b for a, b in zip(xs, ys))
    return _clamp(sxy / math.sqrt(sxx * syy))


def _apply(method: str, x: Sequence, y: Sequence) -> float | None:
    return pearson(x, y) if method == "pearson" else cosine(x, y)


def similarity_at(
    index: SeriesIndex, a: str, b: str, w: WindowSpec
) -> SimilarityValue:
    """The measure for persons a, b at window w; symmetric in (a, b)."""
    x = index.window(a, w)
    y = index.window(b, w)
    return SimilarityValue(value=_apply(w.method, x, y), method=w.method, window=w)


def correlation_over_time(
    index: SeriesIndex,
    a: str,
    b: str,
    n: int,
    start: date | None = None,
    end: date | None = None,
    method: str = "pearson",
) -> CorrelationSeries:
    """Similarity of a and b for every end date in [start, end] where a
    full n-day window fits inside the range.

    Computed incrementally (O(1) per day); exact integer sums make the
    result identical to per-window recomputation. UNDEFINED windows are
    carried as None points, not zeros.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    minimum = 2 if method == "pearson" else 1
    if n < minimum:
        raise TooShort(f"n must be >= {minimum} for {method}")
    start = start or index.start_date
    end = end or index.end_date
    index.check_range(start, end)
    first_end = start + timedelta(days=n - 1)
    if first_end > end:
        raise TooShort(
            f"no {n}-day window fits in [{start}, {end}]"
        )

    xs = index.series(a).slice(start, end)
    ys = index.series(b).slice(start, end)
    stats = RollingStats.from_window(xs[:n], ys[:n])
    points: list[tuple[date, float | None]] = []
    for i, end_date in enumerate(day_range(first_end, end)):
        if i > 0:
            stats = stats.slide(xs[i - 1], xs[i + n - 1], ys[i - 1], ys[i + n - 1])
        if method == "pearson":
            value = pearson_from_stats(stats)
        else:
            value = cosine_from_sums(stats.sum_xx, stats.sum_yy, stats.sum_xy)
        points.append((end_date, value))
    return CorrelationSeries(a, b, n, method, tuple(points))


def similarity_matrix(
    index: SeriesIndex, persons: Sequence[str], w: WindowSpec
) -> SimilarityMatrix:
    """All-pairs similarity at window w.

    Per-person window moments are computed once and shared across pairs;
    the upper triangle is computed and mirrored, so the matrix is symmetric
    to the bit. The diagonal is 1.0 wherever the measure is defined for the
    person's own window.
    """
    persons = list(persons)
    if len(set(persons)) != len(persons):
        raise ValueError("persons must be distinct")
    windows = [index.window(p, w) for p in persons]
    # per-person moments and the pairwise product sums come from one exact
    # int64 Gram matrix, so P persons cost O(P^2) combination work
    grid = np.asarray(windows, dtype=np.int64)
    gram = grid @ grid.T
    sums = [int(v) for v in grid.sum(axis=1)]
    sq = [int(gram[i, i]) for i in range(len(persons))]

    k = len(persons)
    cells: list[list[float | None]] = [[None] * k for _ in range(k)]
    for i in range(k):
        if w.method == "pearson":
            defined = w.n * sq[i] - sums[i] * sums[i] > 0
        else:
            defined = sq[i] > 0
        cells[i][i] = 1.0 if defined else None
        for j in range(i + 1, k):
            sxy = int(gram[i, j])
            if w.method == "pearson":
                value = pearson_from_sums(w.n, sums[i], sq[i], sums[j], sq[j], sxy)
            else:
                value = cosine_from_sums(sq[i], sq[j], sxy)
            cells[i][j] = value
            cells[j][i] = value
    return SimilarityMatrix(
        persons=tuple(persons),
        values=tuple(tuple(row) for row in cells),
        window=w,
    )


def write_series_csv(series: CorrelationSeries, fp: TextIO) -> None:
    """end_date,value rows; empty value for UNDEFINED points."""
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(["end_date", "value"])
    for end_date, value in series.points:
        writer.writerow([end_date.isoformat(), "" if value is None else repr(value)])


def write_matrix_csv(matrix: SimilarityMatrix, fp: TextIO) -> None:
    """Person-name header row and column; cells to 2 decimals, empty for
    UNDEFINED."""
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(["person", *matrix.persons])
    for person, row in zip(matrix.persons, matrix.values):
        writer.writerow(
            [person, *("" if v is None else f"{v:.2f}" for v in row)]
        )


def read_matrix_csv(fp: TextIO) -> SimilarityMatrix:
    reader = csv.reader(fp)
    header = next(reader)
    persons = tuple(header[1:])
    values = []
    for row in reader:
        values.append(tuple(None if cell == "" else float(cell) for cell in row[1:]))
    return SimilarityMatrix(persons=persons, values=tuple(values))
