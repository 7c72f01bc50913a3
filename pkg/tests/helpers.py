"""Random small indexes and brute-force oracles shared by the property tests."""

import math
import random

from concept_ir.index import IndexPair, SemanticPosting
from concept_ir.ontology import UNKNOWN, ConceptGraph

TERMS = ["t0", "t1", "t2", "t3", "t4", "t5"]

# a chain c0 - c1 - c2 plus an island c3; every term can denote any concept
GRAPH = ConceptGraph.build(
    [("c0", "c0", "concept"), ("c1", "c1", "concept"), ("c2", "c2", "concept"), ("c3", "c3", "concept")],
    [("c0", "rel", "c1"), ("c1", "rel", "c2")],
    [(t, c) for t in TERMS for c in ("c0", "c1", "c2", "c3")],
)
RCS = ["c0", "c1", "c2", "c3", UNKNOWN]


def random_index(rng: random.Random, max_docs=8, max_terms=6) -> IndexPair:
    n_docs = rng.randint(1, max_docs)
    terms = TERMS[: rng.randint(1, max_terms)]
    semantic = {}
    for term in terms:
        for rc in rng.sample(RCS, rng.randint(1, 3)):
            docs = sorted(rng.sample(range(1, n_docs + 1), rng.randint(1, n_docs)))
            semantic[(term, rc)] = SemanticPosting(term, tuple((d, rng.randint(1, 20)) for d in docs), rc)
    return IndexPair.from_semantic(semantic, n_docs)


def doc_set(ix: IndexPair, term: str) -> set:
    p = ix.posting(term)
    return set(p.doc_ids) if p else set()


def dense_rank(ix: IndexPair, terms, k=None):
    """Brute-force cosine over full dense vectors restricted to the query dims."""
    terms = list(dict.fromkeys(terms))
    matrix = {}
    for doc in range(1, ix.n_docs + 1):
        row = []
        for t in terms:
            p = ix.posting(t)
            tf = p.tf(doc) if p else 0
            w = (1 + math.log10(tf)) * math.log10(ix.n_docs / p.df) if tf else 0.0
            row.append(w)
        matrix[doc] = row
    q = [1.0] * len(terms)
    scores = {}
    for doc, row in matrix.items():
        if not any(doc_set(ix, t) and doc in doc_set(ix, t) for t in terms):
            continue
        nd = math.sqrt(sum(x * x for x in row))
        nq = math.sqrt(len(q))
        scores[doc] = sum(a * b for a, b in zip(row, q)) / (nd * nq) if nd else 0.0
    ranked = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked if k is None else ranked[:k]
