from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"

sys.path.insert(0, str(Path(__file__).parent))

from newscorr.corpus import clean_article
from newscorr.ner import Gazetteer, extract_corpus_mentions, load_gazetteer
from newscorr.service import build_index
from newscorr.store import CorpusStore, ingest
from newscorr import synth


@pytest.fixture(scope="session")
def fixture_paths():
    return {
        "corpus": FIXTURES / "news.jsonl",
        "gazetteer": FIXTURES / "gazetteer.txt",
        "stoplist": FIXTURES / "stoplist.txt",
    }


def build_store(tmp_dir: Path, articles: list[dict], gazetteer: Gazetteer) -> Path:
    """Ingest raw articles and extract mentions into a fresh store file."""
    path = tmp_dir / "corpus.db"
    with CorpusStore(path) as store:
        for raw in articles:
            store.add_article(clean_article(raw))
        events, _ = extract_corpus_mentions(store.iter_articles(), gazetteer)
        store.replace_mentions(events)
    return path


@pytest.fixture(scope="session")
def regime_store(tmp_path_factory, fixture_paths) -> Path:
    """The shipped regime-switch fixture, ingested and extracted."""
    path = tmp_path_factory.mktemp("regime") / "corpus.db"
    gazetteer = load_gazetteer(fixture_paths["gazetteer"])
    with CorpusStore(path) as store:
        ingest(fixture_paths["corpus"], store)
        events, _ = extract_corpus_mentions(store.iter_articles(), gazetteer)
        store.replace_mentions(events)
    return path


@pytest.fixture(scope="session")
def zipf_store(tmp_path_factory) -> Path:
    """A 20-person Zipf corpus store (mds/matrix material)."""
    articles, _ = synth.zipf_corpus()
    gazetteer = Gazetteer.from_names(synth.ZIPF_NAMES)
    return build_store(tmp_path_factory.mktemp("zipf"), articles, gazetteer)


@pytest.fixture(scope="session")
def zipf_index(zipf_store):
    with CorpusStore(zipf_store) as store:
        return build_index(store)


@pytest.fixture(scope="session")
def regime_index(regime_store):
    with CorpusStore(regime_store) as store:
        return build_index(store)
