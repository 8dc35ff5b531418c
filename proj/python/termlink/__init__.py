# Copyright 2026 The Termlink Authors.
# Licensed under the Apache License, Version 2.0; see the LICENSE file.

"""Term extraction, relation classification and entity linking toolkit."""

from termlink._core import (  # noqa: F401
    AnnotatedDocument,
    Candidate,
    Document,
    EmbeddingStore,
    EntityRecord,
    KBStore,
    LabelScore,
    LinkAnnotation,
    LinkingExample,
    LinkingReport,
    MetricsReport,
    NGramStat,
    Pattern,
    RelationInstance,
    SentenceSpan,
    TermAnnotation,
    TermDictionary,
    Token,
    TokenRange,
    __version__,
    candidate_pairs,
    classify,
    collect_linking_examples,
    cosine_similarity,
    dictionary_tag,
    document_from_json_line,
    document_to_json_line,
    extract_all,
    generate_candidates,
    link_document,
    linking_metrics,
    load_patterns,
    merge_annotations,
    mine_ngrams,
    normalize,
    normalize_phrase,
    parse_patterns,
    rank_by_tfidf,
    read_annotations,
    relation_metrics,
    repair_boundaries,
    run_pipeline,
    run_weak_supervision,
    term_metrics_exact,
    term_metrics_partial,
    tokenize,
    validate_document,
    write_annotations,
)
