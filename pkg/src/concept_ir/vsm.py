"""Vector space ranking with log-scaled tf, log10 idf and cosine similarity."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DivisionByZeroDf, EmptyQuery, InvariantViolation
from .index import IndexPair
from .ontology import UNKNOWN, ConceptGraph, ReferenceConcept, related, resolve_rc

QUERY_WEIGHTINGS = ("binary", "idf")
NORMS = ("query-subspace", "full")
_SCORE_DIGITS = 12


@dataclass(frozen=True)
class RankedHit:
    doc_id: int
    score: float


def wtf(tf: int) -> float:
    """1 + log10(tf) for tf > 0, else 0."""
    if tf < 0:
        raise InvariantViolation(f"negative term frequency {tf}")
    return 1.0 + math.log10(tf) if tf > 0 else 0.0


def idf(n_docs: int, df: int) -> float:
    """log10(N / df)."""
    if df == 0:
        raise DivisionByZeroDf("document frequency is zero")
    if df < 0 or df > n_docs:
        raise InvariantViolation(f"df={df} outside 1..N={n_docs}")
    return math.log10(n_docs / df)


def cosine(d: Sequence[float], q: Sequence[float]) -> float:
    if len(d) != len(q):
        raise ValueError("vectors differ in dimension")
    nd = math.sqrt(sum(x * x for x in d))
    nq = math.sqrt(sum(x * x for x in q))
    if nd == 0.0 or nq == 0.0:
        return 0.0
    return sum(a * b for a, b in zip(d, q)) / (nd * nq)


def _order(hits: dict, k: Optional[int]) -> list:
    ranked = sorted(hits.items(), key=lambda kv: (-round(kv[1], _SCORE_DIGITS), kv[0]))
    if k is not None:
        ranked = ranked[:k]
    return [RankedHit(d, s) for d, s in ranked]


def _check_options(query_weighting: str, norm: str) -> None:
    if query_weighting not in QUERY_WEIGHTINGS:
        raise ValueError(f"query_weighting must be one of {QUERY_WEIGHTINGS}")
    if norm not in NORMS:
        raise ValueError(f"norm must be one of {NORMS}")


def _score(
    postings: list,
    n_docs: int,
    k: Optional[int],
    query_weighting: str,
    norm: str,
    full_norms: Optional[dict],
) -> list:
    """``postings`` holds one ``{doc: tf}`` map per query dimension."""
    idfs = [idf(n_docs, len(p)) if p else 0.0 for p in postings]
    q = [w if query_weighting == "idf" else 1.0 for w in idfs]
    candidates = sorted({d for p in postings for d in p})
    hits = {}
    for doc in candidates:
        vec = [wtf(p.get(doc, 0)) * w for p, w in zip(postings, idfs)]
        if norm == "full":
            nd = full_norms.get(doc, 0.0)
            nq = math.sqrt(sum(x * x for x in q))
            dot = sum(a * b for a, b in zip(vec, q))
            hits[doc] = dot / (nd * nq) if nd and nq else 0.0
        else:
            hits[doc] = cosine(vec, q)
    return _order(hits, k)


def _distinct(terms: Sequence[str]) -> list:
    terms = list(dict.fromkeys(terms))
    if not terms:
        raise EmptyQuery("query has no terms after preprocessing")
    return terms


def document_norms(ix: IndexPair, semantic: bool = False) -> dict:
    """Full-vocabulary tf-idf vector length of every document."""
    sq = defaultdict(float)
    source = ix.semantic.values() if semantic else ix.traditional.values()
    for posting in source:
        w_idf = idf(ix.n_docs, posting.df)
        for doc, tf in posting.entries:
            sq[doc] += (wtf(tf) * w_idf) ** 2
    return {d: math.sqrt(v) for d, v in sq.items()}


def rank_traditional(
    ix: IndexPair,
    terms: Sequence[str],
    k: Optional[int] = 10,
    query_weighting: str = "binary",
    norm: str = "query-subspace",
) -> list:
    """Rank every document containing a query term by cosine similarity.

    Document vectors only span the query's dimensions by default, and the
    query vector is all ones; both choices reproduce the worked tables.
    """
    _check_options(query_weighting, norm)
    postings = []
    for t in _distinct(terms):
        p = ix.posting(t)
        postings.append(dict(p.entries) if p else {})
    norms = document_norms(ix) if norm == "full" else None
    return _score(postings, ix.n_docs, k, query_weighting, norm, norms)


def effective_posting(ix: IndexPair, g: ConceptGraph, term: str, rc: ReferenceConcept, h: int) -> dict:
    """Merge the term's ``(term, rc_i)`` postings whose rc_i is related to ``rc``."""
    merged: dict = defaultdict(int)
    for term_rc, posting in ix.senses_of(term).items():
        if related(g, term_rc, rc, h):
            for doc, tf in posting.entries:
                merged[doc] += tf
    return dict(merged)


def rank_semantic(
    ix: IndexPair,
    g: ConceptGraph,
    terms: Sequence[str],
    k: Optional[int] = 10,
    h: int = 0,
    query_weighting: str = "binary",
    norm: str = "query-subspace",
) -> list:
    """Like ``rank_traditional`` but over RC-filtered postings.

    The query rc is resolved from the query terms; each term's effective
    posting (and so its df) only covers rc values related to it. An UNKNOWN
    query rc falls back to traditional ranking.
    """
    _check_options(query_weighting, norm)
    terms = _distinct(terms)
    rc = resolve_rc(g, terms)
    if rc is UNKNOWN:
        return rank_traditional(ix, terms, k, query_weighting, norm)
    postings = [effective_posting(ix, g, t, rc, h) for t in terms]
    norms = document_norms(ix, semantic=True) if norm == "full" else None
    return _score(postings, ix.n_docs, k, query_weighting, norm, norms)
