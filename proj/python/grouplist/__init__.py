"""Group-list index: prefix-tree-derived Boolean retrieval structure."""

from ._grouplist import (  # noqa: F401
    Corpus,
    GroupListError,
    Index,
    benchmark_json,
    build_index,
    corpus_text,
    generate_corpus,
    load_corpus,
    load_corpus_text,
    load_index,
    oracle_scan,
    parse_zeta,
    query,
    save_index,
    write_corpus,
)

__all__ = [
    "Corpus",
    "GroupListError",
    "Index",
    "benchmark_json",
    "build_index",
    "corpus_text",
    "generate_corpus",
    "load_corpus",
    "load_corpus_text",
    "load_index",
    "oracle_scan",
    "parse_zeta",
    "query",
    "save_index",
    "write_corpus",
]
