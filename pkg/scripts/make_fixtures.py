#!/usr/bin/env python3
"""Regenerate the shipped fixtures deterministically.

Writes fixtures/news.jsonl (regime-switch corpus), fixtures/gazetteer.txt
and fixtures/stoplist.txt, and sanity-checks that the planted corpus
actually shows the low-then-high correlation profile before freezing it.

Usage: python scripts/make_fixtures.py --seed 7 [--out fixtures/]
"""

import argparse
import statistics
import sys
from pathlib import Path

from newscorr import synth
from newscorr.similarity import correlation_over_time
from newscorr.timeseries import SeriesIndex


def check_regime_profile(corpus: synth.RegimeSwitchCorpus) -> None:
    person_a, person_b = synth.REGIME_PERSONS
    events = synth.events_from_counts(
        person_a, corpus.counts[person_a], corpus.start
    ) + synth.events_from_counts(person_b, corpus.counts[person_b], corpus.start)
    days = len(corpus.counts[person_a])
    end = corpus.start.fromordinal(corpus.start.toordinal() + days - 1)
    index = SeriesIndex.from_events(events, corpus.start, end)

    series = correlation_over_time(index, person_a, person_b, n=30)
    before = [v for d, v in series.points if d < corpus.switch and v is not None]
    after = [v for d, v in series.points if d >= corpus.switch and v is not None]
    mean_before = statistics.fmean(before)
    mean_after = statistics.fmean(after)
    print(f"n=30: mean before switch {mean_before:+.4f}, after {mean_after:+.4f}")
    assert mean_before < 0.2, "fixture seed gives too much pre-switch correlation"
    assert mean_after > 0.8, "fixture seed gives too little post-switch correlation"

    smooth = correlation_over_time(index, person_a, person_b, n=120)
    for label, s in (("n=30", series), ("n=120", smooth)):
        values = [v for _, v in s.points if v is not None]
        diffs = [b - a for a, b in zip(values, values[1:])]
        print(f"{label}: diff variance {statistics.pvariance(diffs):.6f}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, required=True)
    parser.add_argument("--out", default="fixtures")
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    corpus = synth.regime_switch_corpus(args.seed)
    check_regime_profile(corpus)
    synth.write_jsonl(corpus.articles, out / "news.jsonl")
    (out / "gazetteer.txt").write_text(
        "\n".join(synth.gazetteer_lines()) + "\n", encoding="utf-8"
    )
    (out / "stoplist.txt").write_text(
        "\n".join(synth.stoplist_lines()) + "\n", encoding="utf-8"
    )
    print(f"wrote {out}/news.jsonl ({len(corpus.articles)} articles)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
