"""Estimator-style wrappers: ``fit`` on a collection, ``predict`` on queries.

The wrappers follow scikit-learn conventions (constructor stores parameters
untouched, fitted state ends in ``_``, ``get_params``/``set_params`` come from
``BaseEstimator``) so they compose with ``clone`` and parameter grids.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import boolean, vsm
from .corpus import Collection, Document
from .errors import EmptyCollection
from .index import IndexPair, build_index
from .ontology import UNKNOWN, ConceptGraph, ReferenceConcept, load_ontology, resolve_rc
from .textpipe import LANGUAGES, StopWords, pipeline

SEARCH_MODES = ("traditional", "semantic")


def check_collection(X) -> Collection:
    """Coerce ``X`` to a Collection.

    Accepts a Collection, Documents, ``(doc_id, text)`` pairs, ``{"id", "text"}``
    dicts, or plain strings (numbered from 1).
    """
    if isinstance(X, Collection):
        return X
    if isinstance(X, (str, bytes)):
        raise TypeError("expected a sequence of documents, got a single string")
    items = list(X)
    if not items:
        raise EmptyCollection("no documents")
    pairs = []
    for pos, item in enumerate(items, start=1):
        if isinstance(item, Document):
            pairs.append((item.doc_id, item.text))
        elif isinstance(item, str):
            pairs.append((pos, item))
        elif isinstance(item, dict):
            pairs.append((item["id"], item["text"]))
        elif isinstance(item, tuple) and len(item) == 2:
            pairs.append(item)
        else:
            raise TypeError(f"cannot interpret document #{pos}: {type(item).__name__}")
    return Collection.from_pairs(pairs)


def check_queries(X) -> list:
    """A single query string or an iterable of them, as a list of strings."""
    if isinstance(X, str):
        return [X]
    queries = list(X)
    for q in queries:
        if not isinstance(q, str):
            raise TypeError(f"queries must be strings, got {type(q).__name__}")
    return queries


def check_ontology(ontology) -> Optional[ConceptGraph]:
    if ontology is None or isinstance(ontology, ConceptGraph):
        return ontology
    if isinstance(ontology, (str, Path)):
        return load_ontology(ontology)
    raise TypeError(f"ontology must be a ConceptGraph or a path, got {type(ontology).__name__}")


def _check_choice(name, value, allowed):
    if value not in allowed:
        raise ValueError(f"{name} must be one of {allowed}, got {value!r}")


class ConceptIndexer(TransformerMixin, BaseEstimator):
    """Build the traditional + semantic index pair; ``transform`` annotates phrases."""

    def __init__(self, ontology=None, language: str = "auto", stopwords: Optional[StopWords] = None):
        self.ontology = ontology
        self.language = language
        self.stopwords = stopwords

    def fit(self, X, y=None):
        _check_choice("language", self.language, LANGUAGES)
        self.graph_ = check_ontology(self.ontology)
        collection = check_collection(X)
        self.index_ = build_index(collection, self.graph_, self.language, self.stopwords)
        self.n_docs_ = collection.n_docs
        return self

    def transform(self, X) -> list:
        """Per document, the ``(terms, rc)`` pair of every non-empty phrase."""
        check_is_fitted(self, "index_")
        out = []
        for doc in check_collection(X):
            annotated = []
            for phrase in doc.phrases:
                terms = pipeline(phrase, self.language, self.stopwords)
                if terms:
                    rc = resolve_rc(self.graph_, terms) if self.graph_ is not None else UNKNOWN
                    annotated.append((tuple(terms), rc))
            out.append(annotated)
        return out


class _Retriever(BaseEstimator):
    def _fit(self, X):
        _check_choice("mode", self.mode, SEARCH_MODES)
        _check_choice("language", self.language, LANGUAGES)
        if self.hops < 0:
            raise ValueError("hops must be non-negative")
        self.graph_ = check_ontology(self.ontology)
        if self.mode == "semantic" and self.graph_ is None:
            raise ValueError("semantic mode needs an ontology")
        if isinstance(X, IndexPair):
            self.index_ = X
        else:
            self.index_ = build_index(check_collection(X), self.graph_, self.language, self.stopwords)
        return self

    def terms(self, query: str) -> list:
        return pipeline(query, self.language, self.stopwords)

    def query_rc(self, query: str) -> ReferenceConcept:
        check_is_fitted(self, "index_")
        if self.graph_ is None:
            return UNKNOWN
        return resolve_rc(self.graph_, self.terms(query))


class BooleanRetriever(_Retriever):
    """Flat AND / OR / NOT retrieval; ``predict`` returns sorted doc id lists."""

    def __init__(
        self,
        ontology=None,
        mode: str = "semantic",
        hops: int = 0,
        language: str = "auto",
        stopwords: Optional[StopWords] = None,
    ):
        self.ontology = ontology
        self.mode = mode
        self.hops = hops
        self.language = language
        self.stopwords = stopwords

    def fit(self, X, y=None):
        return self._fit(X)

    def parse(self, query: str) -> boolean.BooleanQuery:
        return boolean.parse_boolean(query, self.language, self.stopwords)

    def query_rc(self, query: str) -> ReferenceConcept:
        check_is_fitted(self, "index_")
        if self.graph_ is None:
            return UNKNOWN
        return boolean.query_rc(self.graph_, self.parse(query))

    def search(self, query: str) -> list:
        check_is_fitted(self, "index_")
        q = self.parse(query)
        if self.mode == "semantic":
            return boolean.eval_semantic(self.index_, self.graph_, q, self.hops)
        return boolean.eval_query(self.index_, q)

    def predict(self, X) -> list:
        return [self.search(q) for q in check_queries(X)]


class VectorSpaceRanker(_Retriever):
    """Cosine-ranked retrieval; ``predict`` returns ranked doc id lists."""

    def __init__(
        self,
        ontology=None,
        mode: str = "semantic",
        hops: int = 0,
        topk: Optional[int] = 10,
        query_weighting: str = "binary",
        norm: str = "query-subspace",
        language: str = "auto",
        stopwords: Optional[StopWords] = None,
    ):
        self.ontology = ontology
        self.mode = mode
        self.hops = hops
        self.topk = topk
        self.query_weighting = query_weighting
        self.norm = norm
        self.language = language
        self.stopwords = stopwords

    def fit(self, X, y=None):
        _check_choice("query_weighting", self.query_weighting, vsm.QUERY_WEIGHTINGS)
        _check_choice("norm", self.norm, vsm.NORMS)
        if self.topk is not None and self.topk < 1:
            raise ValueError("topk must be positive or None")
        return self._fit(X)

    def rank(self, query: str) -> list:
        check_is_fitted(self, "index_")
        terms = self.terms(query)
        if self.mode == "semantic":
            return vsm.rank_semantic(
                self.index_, self.graph_, terms, self.topk, self.hops, self.query_weighting, self.norm
            )
        return vsm.rank_traditional(self.index_, terms, self.topk, self.query_weighting, self.norm)

    def decision_function(self, X) -> list:
        """Ranked ``(doc_id, score)`` pairs per query."""
        return [[(h.doc_id, h.score) for h in self.rank(q)] for q in check_queries(X)]

    def predict(self, X) -> list:
        return [[h.doc_id for h in self.rank(q)] for q in check_queries(X)]


def make_retriever(model: str, **params) -> _Retriever:
    if model == "boolean":
        params.pop("topk", None)
        params.pop("query_weighting", None)
        params.pop("norm", None)
        return BooleanRetriever(**params)
    if model == "vsm":
        return VectorSpaceRanker(**params)
    raise ValueError(f"unknown model {model!r}")
