"""Concept-aware information retrieval over Arabic and English text.

Phrases are annotated with a Reference Concept (RC) drawn from an ontology,
indexed under both the bare term and the ``(term, RC)`` pair, and searched
with Boolean or vector space models in traditional or semantic mode.
"""

from .boolean import BooleanQuery, eval_and, eval_not, eval_or, eval_query, eval_semantic, parse_boolean
from .corpus import Collection, Document, Phrase, load_collection, save_collection, segment_phrases
from .errors import ConceptIRError
from .estimators import BooleanRetriever, ConceptIndexer, VectorSpaceRanker
from .evaluation import RunResult, compare_report, pr_at_k, precision, recall
from .index import IndexPair, build_index, load_index, save_index, synthesize_fixture
from .ontology import UNKNOWN, ConceptGraph, hop_distance, load_ontology, related, resolve_rc
from .textpipe import normalize, pipeline, stem
from .vsm import RankedHit, cosine, idf, rank_semantic, rank_traditional, wtf

__version__ = "0.1.0"

__all__ = [
    "BooleanQuery",
    "BooleanRetriever",
    "Collection",
    "ConceptGraph",
    "ConceptIRError",
    "ConceptIndexer",
    "Document",
    "IndexPair",
    "Phrase",
    "RankedHit",
    "RunResult",
    "UNKNOWN",
    "VectorSpaceRanker",
    "build_index",
    "compare_report",
    "cosine",
    "eval_and",
    "eval_not",
    "eval_or",
    "eval_query",
    "eval_semantic",
    "hop_distance",
    "idf",
    "load_collection",
    "load_index",
    "load_ontology",
    "normalize",
    "parse_boolean",
    "pipeline",
    "pr_at_k",
    "precision",
    "rank_semantic",
    "rank_traditional",
    "recall",
    "related",
    "resolve_rc",
    "save_collection",
    "save_index",
    "segment_phrases",
    "stem",
    "synthesize_fixture",
    "wtf",
]
