"""Flat Boolean retrieval (AND / OR / NOT) over the inverted indexes."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import EmptyQuery
from .index import IndexPair
from .ontology import UNKNOWN, ConceptGraph, ReferenceConcept, related, resolve_rc
from .textpipe import StopWords, normalize, pipeline, split_words

AND, OR, NOT = "AND", "OR", "NOT"

# normalized forms; Arabic أو folds to او
OPERATOR_WORDS = {
    "and": AND,
    "or": OR,
    "not": NOT,
    "و": AND,
    "او": OR,
    "ليس": NOT,
}


@dataclass(frozen=True)
class BooleanQuery:
    """``terms`` are AND-combined for NOT; ``negated`` is only used by NOT."""

    operator: str
    terms: tuple
    negated: tuple = ()

    @property
    def positive_terms(self) -> tuple:
        return self.terms


def parse_boolean(raw: str, language: str = "auto", stopwords: Optional[StopWords] = None) -> BooleanQuery:
    """Parse a flat query: one operator, or none (implicit AND).

    Operator words are consumed before stop-word removal. For NOT, words
    before the first NOT are the base and words after it are negated.
    """
    words = split_words(raw)
    operators = [OPERATOR_WORDS.get(normalize(w)) for w in words]
    found = [op for op in operators if op]
    if NOT in found:
        cut = operators.index(NOT)
        base_words = [w for w, op in zip(words[:cut], operators[:cut]) if not op]
        neg_words = [w for w, op in zip(words[cut + 1 :], operators[cut + 1 :]) if not op]
        base = _dedupe(pipeline(base_words, language, stopwords))
        negated = _dedupe(pipeline(neg_words, language, stopwords))
        if not base:
            raise EmptyQuery(f"NOT needs at least one positive term: {raw!r}")
        return BooleanQuery(NOT, tuple(base), tuple(negated))
    operator = OR if OR in found else AND
    terms = _dedupe(pipeline([w for w, op in zip(words, operators) if not op], language, stopwords))
    if not terms:
        raise EmptyQuery(f"no index terms left in query {raw!r}")
    return BooleanQuery(operator, tuple(terms))


def _dedupe(terms: Sequence[str]) -> list:
    return list(dict.fromkeys(terms))


DocLookup = Callable[[str], list]


def _and(terms: Sequence[str], docs_of: DocLookup) -> list:
    if not terms:
        return []
    lists = sorted((docs_of(t) for t in terms), key=len)
    candidates = list(lists[0])
    for docs in lists[1:]:
        if not candidates:
            break
        present = set(docs)
        candidates = [d for d in candidates if d in present]
    return candidates


def _or(terms: Sequence[str], docs_of: DocLookup) -> list:
    merged = []
    for d in heapq.merge(*(docs_of(t) for t in terms)):
        if not merged or merged[-1] != d:
            merged.append(d)
    return merged


def _not(base: Sequence[str], negated: Sequence[str], docs_of: DocLookup, neg_docs_of: DocLookup) -> list:
    excluded = set(_or(negated, neg_docs_of))
    return [d for d in _and(base, docs_of) if d not in excluded]


def _traditional_lookup(ix: IndexPair) -> DocLookup:
    def docs_of(term):
        posting = ix.posting(term)
        return posting.doc_ids if posting else []

    return docs_of


def eval_and(ix: IndexPair, terms: Sequence[str]) -> list:
    """Intersect postings rarest-first, stopping as soon as nothing is left."""
    return _and(terms, _traditional_lookup(ix))


def eval_or(ix: IndexPair, terms: Sequence[str]) -> list:
    return _or(terms, _traditional_lookup(ix))


def eval_not(ix: IndexPair, base: Sequence[str], negated: Sequence[str]) -> list:
    lookup = _traditional_lookup(ix)
    return _not(base, negated, lookup, lookup)


def eval_query(ix: IndexPair, q: BooleanQuery) -> list:
    if q.operator == AND:
        return eval_and(ix, q.terms)
    if q.operator == OR:
        return eval_or(ix, q.terms)
    return eval_not(ix, q.terms, q.negated)


def filtered_docs(ix: IndexPair, g: ConceptGraph, term: str, rc: ReferenceConcept, h: int) -> list:
    """Docs where ``term`` occurs under an rc related to ``rc``."""
    docs = set()
    for term_rc, posting in ix.senses_of(term).items():
        if related(g, term_rc, rc, h):
            docs.update(posting.doc_ids)
    return sorted(docs)


def query_rc(g: ConceptGraph, q: BooleanQuery) -> ReferenceConcept:
    return resolve_rc(g, list(q.positive_terms))


def eval_semantic(ix: IndexPair, g: ConceptGraph, q: BooleanQuery, h: int = 0) -> list:
    """Boolean evaluation over RC-filtered postings.

    Positive terms only keep postings whose rc is related to the query rc.
    Negated terms subtract their full traditional postings, so the semantic
    result is always a subset of the traditional one. An UNKNOWN query rc
    falls back to traditional evaluation.
    """
    rc = query_rc(g, q)
    if rc is UNKNOWN:
        return eval_query(ix, q)

    def docs_of(term):
        return filtered_docs(ix, g, term, rc, h)

    if q.operator == AND:
        return _and(q.terms, docs_of)
    if q.operator == OR:
        return _or(q.terms, docs_of)
    return _not(q.terms, q.negated, docs_of, _traditional_lookup(ix))
