"""Batch command-line entry points.

Every subcommand is a thin wrapper over the library: it parses arguments,
calls the corresponding operation, and serializes with the shared
writers, so CLI output is byte-identical to the library result.

Exit codes: 0 success, 1 usage or domain error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from collections import Counter
from contextlib import contextmanager

from . import __version__, projection, similarity
from .corpus import CleaningConfig
from .dates import parse_date
from .errors import NewscorrError
from .ner import (
    DEFAULT_STOPLIST,
    extract_corpus_mentions,
    load_gazetteer,
    load_stoplist,
    normalize_mentions,
    read_mentions_jsonl,
)
from .service import QueryLimits, build_index, serve
from .store import CorpusStore, ingest
from .timeseries import COUNT_MODES, WindowSpec, rank_frequency_slope, write_series_csv

JSON_KW = dict(ensure_ascii=False, separators=(",", ":"))


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; our contract reserves 2
    # for I/O failures.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


@contextmanager
def _out(path: str | None):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fp:
            yield fp


def _add_store(p: argparse.ArgumentParser) -> None:
    p.add_argument("--store", required=True, help="path of the corpus store file")


def _add_count_mode(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--count-mode",
        choices=COUNT_MODES,
        default="occurrence",
        help="count every mention (occurrence) or one per article (article)",
    )


def _add_range(p: argparse.ArgumentParser) -> None:
    p.add_argument("--from", dest="date_from", help="range start (ISO date)")
    p.add_argument("--to", dest="date_to", help="range end (ISO date)")


def _parse_range(args) -> tuple:
    start = parse_date(args.date_from) if args.date_from else None
    end = parse_date(args.date_to) if args.date_to else None
    return start, end


def cmd_ingest(args) -> int:
    config = CleaningConfig.from_file(args.config) if args.config else None
    with CorpusStore(args.store) as store:
        report = ingest(args.corpus, store, config)
    print(json.dumps(report.to_dict(), **JSON_KW))
    return 0


def cmd_stats(args) -> int:
    with CorpusStore(args.store) as store:
        stats = store.stats()
    print(json.dumps(stats.to_dict(), **JSON_KW))
    return 0


def cmd_extract(args) -> int:
    gazetteer = load_gazetteer(args.gazetteer) if args.gazetteer else None
    if args.stoplist:
        stoplist = load_stoplist(args.stoplist)
    else:
        stoplist = set(DEFAULT_STOPLIST)
    with CorpusStore(args.store) as store:
        if args.mentions:
            with open(args.mentions, encoding="utf-8") as fp:
                raw = read_mentions_jsonl(fp)
            events, _ = normalize_mentions(raw, gazetteer, stoplist)
        else:
            events, _ = extract_corpus_mentions(
                store.iter_articles(), gazetteer, stoplist
            )
        stored = store.replace_mentions(events)

    if args.count_mode == "article":
        totals = Counter(c for _, c in {(e.article_id, e.canonical) for e in events})
    else:
        totals = Counter(e.canonical for e in events)
    ordered = dict(sorted(totals.items(), key=lambda kv: (-kv[1], kv[0])))
    print(
        json.dumps(
            {
                "mentions": stored,
                "persons": len(ordered),
                "count_mode": args.count_mode,
                "totals": ordered,
            },
            **JSON_KW,
        )
    )
    return 0


def cmd_correlate(args) -> int:
    start, end = _parse_range(args)
    with CorpusStore(args.store) as store:
        index = build_index(store, args.count_mode)
    series = similarity.correlation_over_time(
        index, args.a, args.b, args.n, start, end, args.method
    )
    with _out(args.out) as fp:
        similarity.write_series_csv(series, fp)
    return 0


def _split_persons(raw: str) -> list[str]:
    persons = [p.strip() for p in raw.split(",") if p.strip()]
    if not persons:
        raise NewscorrError("no persons given")
    return persons


def cmd_matrix(args) -> int:
    persons = _split_persons(args.persons)
    with CorpusStore(args.store) as store:
        index = build_index(store, args.count_mode)
    w = WindowSpec(end_date=parse_date(args.end), n=args.n, method=args.method)
    matrix = similarity.similarity_matrix(index, persons, w)
    with _out(args.out) as fp:
        similarity.write_matrix_csv(matrix, fp)
    return 0


def cmd_mds(args) -> int:
    persons = _split_persons(args.persons)
    with CorpusStore(args.store) as store:
        index = build_index(store, args.count_mode)
    w = WindowSpec(end_date=parse_date(args.end), n=args.n, method="pearson")
    matrix = similarity.similarity_matrix(index, persons, w)
    distance = projection.to_distance(matrix)
    embedding = projection.classical_mds(distance)
    with _out(args.out) as fp:
        projection.write_embedding_csv(embedding, fp)
    if args.diagnostics:
        with _out(args.diagnostics) as fp:
            json.dump(embedding.diagnostics(distance), fp, **JSON_KW)
            fp.write("\n")
    return 0


def cmd_top(args) -> int:
    start, end = _parse_range(args)
    with CorpusStore(args.store) as store:
        index = build_index(store, args.count_mode)
    ranked = index.top_k(args.k, start, end)
    with _out(args.out) as fp:
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(["person", "count"])
        writer.writerows(ranked)
    if args.slope:
        counts = [c for _, c in ranked]
        print(f"zipf_slope={rank_frequency_slope(counts):.4f}", file=sys.stderr)
    return 0


def cmd_export(args) -> int:
    with CorpusStore(args.store) as store:
        if args.what == "series":
            index = build_index(store, args.count_mode)
            with _out(args.out) as fp:
                write_series_csv(index, fp)
            return 0
        with _out(args.out) as fp:
            if args.what == "articles":
                store.export_articles_jsonl(fp)
            else:
                store.export_mentions_jsonl(fp)
    return 0


def cmd_serve(args) -> int:
    host, _, port = args.bind.rpartition(":")
    if not host or not port.isdigit():
        raise NewscorrError(f"--bind must be addr:port, got {args.bind!r}")
    limits = QueryLimits.from_file(args.limits) if args.limits else None
    serve(
        args.store,
        host=host,
        port=int(port),
        limits=limits,
        count_mode=args.count_mode,
        cors_origins=tuple(args.cors_origin),
        ui_dir=args.ui,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="newscorr", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="clean and store a JSONL corpus")
    p.add_argument("corpus", help="path of the JSONL corpus file")
    _add_store(p)
    p.add_argument("--config", help="TOML config with cleaning.patterns")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("stats", help="print stats over the stored corpus")
    _add_store(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("extract", help="extract person mentions into the store")
    _add_store(p)
    p.add_argument("--gazetteer", help="name list file; omit for the heuristic mode")
    p.add_argument("--stoplist", help="stoplist file; defaults to the built-in list")
    p.add_argument(
        "--mentions", help="import externally extracted mentions (JSONL) instead"
    )
    _add_count_mode(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("correlate", help="similarity of two persons over time (CSV)")
    _add_store(p)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--n", type=int, default=30, help="window length in days")
    _add_range(p)
    p.add_argument("--method", choices=similarity.METHODS, default="pearson")
    p.add_argument("--out", default="-", help="output file, '-' for stdout")
    _add_count_mode(p)
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("matrix", help="all-pairs similarity matrix (CSV)")
    _add_store(p)
    p.add_argument("--persons", required=True, help="comma-separated canonical names")
    p.add_argument("--end", required=True, help="window end date (ISO)")
    p.add_argument("--n", type=int, default=30)
    p.add_argument("--method", choices=similarity.METHODS, default="pearson")
    p.add_argument("--out", default="-")
    _add_count_mode(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("mds", help="2-D MDS layout of persons (CSV + diagnostics)")
    _add_store(p)
    p.add_argument("--persons", required=True, help="comma-separated canonical names")
    p.add_argument("--end", required=True, help="window end date (ISO)")
    p.add_argument("--n", type=int, default=30)
    p.add_argument("--out", default="-")
    p.add_argument("--diagnostics", help="write diagnostics JSON to this file")
    _add_count_mode(p)
    p.set_defaults(func=cmd_mds)

    p = sub.add_parser("top", help="most-mentioned persons (CSV)")
    _add_store(p)
    p.add_argument("--k", type=int, default=20)
    _add_range(p)
    p.add_argument("--out", default="-")
    p.add_argument(
        "--slope",
        action="store_true",
        help="also print the rank-frequency log-log slope to stderr",
    )
    _add_count_mode(p)
    p.set_defaults(func=cmd_top)

    p = sub.add_parser("export", help="export stored records (JSONL) or series (CSV)")
    _add_store(p)
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.add_argument(
        "--what", choices=["articles", "mentions", "series"], default="articles"
    )
    p.add_argument("--out", default="-")
    _add_count_mode(p)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("serve", help="run the HTTP query API")
    _add_store(p)
    p.add_argument("--bind", default="127.0.0.1:8000", help="addr:port to listen on")
    p.add_argument("--limits", help="TOML file with [limits] overrides")
    p.add_argument(
        "--cors-origin",
        action="append",
        default=["*"],
        help="allowed CORS origin (repeatable)",
    )
    p.add_argument("--ui", help="directory of built UI assets to serve at /")
    _add_count_mode(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
        sys.stdout.flush()
        return code
    except NewscorrError as exc:
        print(f"newscorr: error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # downstream consumer (head, ...) closed our stdout; not an error.
        # Redirect to devnull so the interpreter's shutdown flush is quiet.
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    except OSError as exc:
        print(f"newscorr: io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
