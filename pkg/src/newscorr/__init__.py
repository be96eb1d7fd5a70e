"""newscorr: person-mention time series and windowed similarity over news corpora."""

__version__ = "0.1.0"

from .corpus import ArticleRecord, CleaningConfig, CorpusStats, clean_article
from .ner import (
    AliasTable,
    Gazetteer,
    MentionEvent,
    build_alias_table,
    extract_mentions,
    load_gazetteer,
    load_stoplist,
    normalize,
)
from .projection import DistanceMatrix, Embedding2D, classical_mds, to_distance
from .similarity import (
    CorrelationSeries,
    SimilarityMatrix,
    SimilarityValue,
    correlation_over_time,
    cosine,
    pearson,
    similarity_at,
    similarity_matrix,
)
from .store import CorpusStore, ingest
from .timeseries import (
    PersonSeries,
    RollingStats,
    SeriesIndex,
    WindowSpec,
    build_daily_counts,
    top_k,
    window_view,
)

__all__ = [
    "ArticleRecord",
    "AliasTable",
    "CleaningConfig",
    "CorpusStats",
    "CorpusStore",
    "CorrelationSeries",
    "DistanceMatrix",
    "Embedding2D",
    "Gazetteer",
    "MentionEvent",
    "PersonSeries",
    "RollingStats",
    "SeriesIndex",
    "SimilarityMatrix",
    "SimilarityValue",
    "WindowSpec",
    "build_alias_table",
    "build_daily_counts",
    "classical_mds",
    "clean_article",
    "correlation_over_time",
    "cosine",
    "extract_mentions",
    "ingest",
    "load_gazetteer",
    "load_stoplist",
    "normalize",
    "pearson",
    "similarity_at",
    "similarity_matrix",
    "to_distance",
    "top_k",
    "window_view",
]
