"""Read-only HTTP JSON API over a built corpus store.

The store's mentions are pre-built into an in-memory SeriesIndex at
startup; requests never touch raw articles. Every endpoint is idempotent,
every error payload is ``{"error": code, "message": text}`` with a
matching status code, and UNDEFINED similarities are JSON null.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from datetime import date

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import projection, similarity
from .dates import num_days, parse_date
from .errors import (
    EmptyRange,
    MalformedDate,
    NewscorrError,
    OutOfRange,
    TooShort,
    UnknownPerson,
)
from .timeseries import COUNT_MODES, SeriesIndex, WindowSpec

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

DEFAULT_PERSONS_LIMIT = 50


@dataclass(frozen=True)
class QueryLimits:
    max_persons_per_matrix: int = 50
    max_range_days: int = 5000

    def __post_init__(self):
        if self.max_persons_per_matrix < 1 or self.max_range_days < 1:
            raise ValueError("limits must be >= 1")

    @classmethod
    def from_file(cls, path) -> "QueryLimits":
        with open(path, "rb") as fp:
            data = tomllib.load(fp).get("limits", {})
        return cls(
            max_persons_per_matrix=int(
                data.get("max_persons_per_matrix", cls.max_persons_per_matrix)
            ),
            max_range_days=int(data.get("max_range_days", cls.max_range_days)),
        )


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        self.status = status
        self.code = code
        self.message = message


def _date_param(value: str | None, fallback: date, name: str) -> date:
    if value is None or value == "":
        return fallback
    try:
        return parse_date(value)
    except MalformedDate:
        raise ApiError(400, "bad_date", f"{name}: not an ISO-8601 date: {value!r}")


def _int_param(value: str | None, fallback: int, name: str) -> int:
    if value is None or value == "":
        return fallback
    try:
        return int(value)
    except ValueError:
        raise ApiError(400, "bad_int", f"{name}: not an integer: {value!r}")


def create_app(
    index: SeriesIndex,
    limits: QueryLimits | None = None,
    cors_origins: tuple[str, ...] = ("*",),
    ui_dir=None,
) -> FastAPI:
    limits = limits or QueryLimits()
    app = FastAPI(
        title="newscorr API",
        version="0.1.0",
        description=(
            "Query API over per-person daily mention counts: person totals, "
            "time series, windowed similarity (Pearson or cosine), all-pairs "
            "similarity matrices, and 2-D MDS layouts."
        ),
    )
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    def _range(from_: str | None, to: str | None) -> tuple[date, date]:
        start = _date_param(from_, index.start_date, "from")
        end = _date_param(to, index.end_date, "to")
        try:
            index.check_range(start, end)
        except EmptyRange:
            raise ApiError(400, "bad_range", f"empty range [{start}, {end}]")
        except OutOfRange:
            raise ApiError(
                400,
                "out_of_range",
                f"[{start}, {end}] outside corpus range "
                f"[{index.start_date}, {index.end_date}]",
            )
        if num_days(start, end) > limits.max_range_days:
            raise ApiError(
                400,
                "range_too_large",
                f"range exceeds {limits.max_range_days} days",
            )
        return start, end

    def _known_person(name: str | None, param: str) -> str:
        if not name:
            raise ApiError(400, "missing_param", f"query parameter {param!r} is required")
        if name not in index:
            raise ApiError(404, "unknown_person", f"unknown person: {name!r}")
        return name

    def _person_list(raw: str | None, minimum: int) -> list[str]:
        if not raw:
            raise ApiError(400, "missing_param", "query parameter 'persons' is required")
        persons = [p.strip() for p in raw.split(",") if p.strip()]
        if len(persons) < minimum:
            raise ApiError(400, "too_few_persons", f"need at least {minimum} persons")
        if len(persons) > limits.max_persons_per_matrix:
            raise ApiError(
                400,
                "too_many_persons",
                f"at most {limits.max_persons_per_matrix} persons per request",
            )
        if len(set(persons)) != len(persons):
            raise ApiError(400, "duplicate_person", "persons must be distinct")
        for p in persons:
            _known_person(p, "persons")
        return persons

    def _window(end_raw: str | None, n_raw: str | None, method: str | None) -> WindowSpec:
        method = method or "pearson"
        if method not in similarity.METHODS:
            raise ApiError(400, "bad_method", f"unknown method: {method!r}")
        n = _int_param(n_raw, 30, "n")
        end = _date_param(end_raw, index.end_date, "end")
        try:
            return WindowSpec(end_date=end, n=n, method=method)
        except TooShort as exc:
            raise ApiError(400, "bad_window", str(exc))

    @app.get("/api/persons", summary="Ranked person list with mention totals")
    def persons(
        range: str | None = None, limit: str | None = None, q: str | None = None
    ):
        """Top persons by total mentions over a date range (``range=FROM:TO``,
        ISO dates), optionally filtered by a case-insensitive name prefix ``q``."""
        if range:
            if ":" not in range:
                raise ApiError(400, "bad_range", "range must be FROM:TO (ISO dates)")
            from_raw, to_raw = range.split(":", 1)
        else:
            from_raw = to_raw = None
        start, end = _range(from_raw, to_raw)
        k = _int_param(limit, DEFAULT_PERSONS_LIMIT, "limit")
        if k < 0:
            raise ApiError(400, "bad_int", "limit must be >= 0")
        totals = index.totals(start, end)
        if q:
            prefix = q.lower()
            totals = {
                name: total
                for name, total in totals.items()
                if name.lower().startswith(prefix)
            }
        ranked = sorted(totals.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
        return {
            "from": start.isoformat(),
            "to": end.isoformat(),
            "persons": [{"name": name, "total": total} for name, total in ranked],
        }

    @app.get("/api/timeseries", summary="Zero-filled daily mention counts")
    def timeseries(
        person: str | None = None,
        from_: str | None = Query(default=None, alias="from"),
        to: str | None = None,
    ):
        name = _known_person(person, "person")
        start, end = _range(from_, to)
        values = index.series(name).slice(start, end)
        day = start
        points = []
        for count in values:
            points.append({"date": day.isoformat(), "count": count})
            day = date.fromordinal(day.toordinal() + 1)
        return {
            "person": name,
            "from": start.isoformat(),
            "to": end.isoformat(),
            "points": points,
        }

    @app.get("/api/correlation", summary="Similarity of two persons over time")
    def correlation(
        a: str | None = None,
        b: str | None = None,
        n: str | None = None,
        from_: str | None = Query(default=None, alias="from"),
        to: str | None = None,
        method: str | None = None,
    ):
        """Sliding-window similarity series; one point per end date where a
        full window fits. UNDEFINED windows are null points."""
        person_a = _known_person(a, "a")
        person_b = _known_person(b, "b")
        method = method or "pearson"
        if method not in similarity.METHODS:
            raise ApiError(400, "bad_method", f"unknown method: {method!r}")
        window_n = _int_param(n, 30, "n")
        if method == "pearson" and window_n < 2:
            raise ApiError(400, "bad_window", "n must be >= 2 for pearson")
        if window_n < 1:
            raise ApiError(400, "bad_window", "n must be >= 1")
        start, end = _range(from_, to)
        try:
            series = similarity.correlation_over_time(
                index, person_a, person_b, window_n, start, end, method
            )
        except TooShort as exc:
            raise ApiError(400, "bad_window", str(exc))
        return {
            "a": person_a,
            "b": person_b,
            "n": window_n,
            "method": method,
            "from": start.isoformat(),
            "to": end.isoformat(),
            "points": [
                {"date": d.isoformat(), "value": v} for d, v in series.points
            ],
        }

    @app.get("/api/matrix", summary="All-pairs similarity matrix")
    def matrix(
        persons: str | None = None,
        end: str | None = None,
        n: str | None = None,
        method: str | None = None,
    ):
        """Symmetric matrix over the given persons at one window; cells are
        rounded to 2 decimals, UNDEFINED cells are null."""
        names = _person_list(persons, minimum=2)
        w = _window(end, n, method)
        try:
            m = similarity.similarity_matrix(index, names, w).rounded(2)
        except OutOfRange as exc:
            raise ApiError(400, "out_of_range", str(exc))
        return {
            "persons": list(m.persons),
            "end": w.end_date.isoformat(),
            "n": w.n,
            "method": w.method,
            "values": [list(row) for row in m.values],
        }

    @app.get("/api/mds", summary="2-D MDS layout of persons")
    def mds(persons: str | None = None, end: str | None = None, n: str | None = None):
        """Classical MDS over distances derived from the Pearson matrix at
        one window; deterministic for a fixed store."""
        names = _person_list(persons, minimum=3)
        w = _window(end, n, "pearson")
        try:
            m = similarity.similarity_matrix(index, names, w)
        except OutOfRange as exc:
            raise ApiError(400, "out_of_range", str(exc))
        distance = projection.to_distance(m)
        embedding = projection.classical_mds(distance)
        return {
            "persons": list(embedding.persons),
            "end": w.end_date.isoformat(),
            "n": w.n,
            "coords": [list(xy) for xy in embedding.coords],
            "stress": embedding.stress,
            "diagnostics": embedding.diagnostics(distance),
        }

    @app.exception_handler(ApiError)
    async def api_error_handler(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"error": exc.code, "message": exc.message},
        )

    @app.exception_handler(NewscorrError)
    async def domain_error_handler(request: Request, exc: NewscorrError):
        if isinstance(exc, UnknownPerson):
            return JSONResponse(
                status_code=404,
                content={"error": "unknown_person", "message": str(exc)},
            )
        return JSONResponse(
            status_code=400,
            content={"error": "bad_request", "message": str(exc)},
        )

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": "bad_request", "message": str(exc.errors())},
        )

    @app.exception_handler(StarletteHTTPException)
    async def http_error_handler(request: Request, exc: StarletteHTTPException):
        code = "not_found" if exc.status_code == 404 else "http_error"
        return JSONResponse(
            status_code=exc.status_code,
            content={"error": code, "message": str(exc.detail)},
        )

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def build_index(store, count_mode: str = "occurrence") -> SeriesIndex:
    """Pre-build the in-memory person series index from a corpus store."""
    if count_mode not in COUNT_MODES:
        raise ValueError(f"unknown count mode {count_mode!r}")
    span = store.date_range()
    if span is None:
        raise EmptyRange("store has no articles; ingest a corpus first")
    return SeriesIndex.from_events(store.iter_mentions(), *span, count_mode=count_mode)


def serve(
    store_path,
    host: str = "127.0.0.1",
    port: int = 8000,
    limits: QueryLimits | None = None,
    count_mode: str = "occurrence",
    cors_origins: tuple[str, ...] = ("*",),
    ui_dir=None,
) -> None:
    import uvicorn

    from .store import CorpusStore

    with CorpusStore(store_path) as store:
        index = build_index(store, count_mode)
    app = create_app(index, limits, cors_origins, ui_dir)
    uvicorn.run(app, host=host, port=port)
