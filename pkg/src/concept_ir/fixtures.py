"""Shipped offline fixtures: ontologies, corpora, queries, qrels and golden indexes.

Two kinds of corpus are shipped. ``*.postings`` files hold published posting
tables (in the index file format); their documents are synthesized so that
indexing them reproduces every tabled posting. ``*.jsonl`` files are small
hand-written collections for the Boolean query suites.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional

from .boolean import parse_boolean, query_rc
from .corpus import Collection, load_collection, save_collection
from .evaluation import load_queries, load_qrels, save_qrels
from .index import IndexPair, PostingSpec, build_index, load_index, save_index, synthesize_fixture
from .ontology import ConceptGraph, load_ontology, resolve_rc, save_ontology
from .textpipe import pipeline

FIXTURE_HOPS = 1


@dataclass(frozen=True)
class FixtureSpec:
    name: str
    ontology: str
    corpus: str
    queries: str
    n_docs: Optional[int] = None


FIXTURES = {
    spec.name: spec
    for spec in (
        FixtureSpec("arabic-vsm", "arabic.tsv", "arabic_vsm.postings", "arabic_vsm.queries.tsv", 11),
        FixtureSpec("arabic-boolean", "arabic.tsv", "arabic_boolean.jsonl", "arabic_boolean.queries.tsv"),
        FixtureSpec("english-vsm", "english.tsv", "english_vsm.postings", "english_vsm.queries.tsv", 100),
        FixtureSpec("english-boolean", "english.tsv", "english_boolean.jsonl", "english_boolean.queries.tsv"),
    )
}


@dataclass(frozen=True, eq=False)
class Fixture:
    name: str
    graph: ConceptGraph
    collection: Collection
    index: IndexPair
    queries: tuple
    qrels: dict
    hops: int = FIXTURE_HOPS


def data_path(filename: str) -> Path:
    return Path(str(resources.files("concept_ir") / "data" / filename))


def qrels_file(name: str) -> Path:
    return data_path(name.replace("-", "_") + ".qrels.tsv")


def golden_index_file(name: str) -> Path:
    return data_path(name.replace("-", "_") + ".golden.idx")


def _spec(name: str) -> FixtureSpec:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None


def build_collection(name: str, graph: ConceptGraph) -> Collection:
    spec = _spec(name)
    path = data_path(spec.corpus)
    if spec.corpus.endswith(".postings"):
        table = load_index(path)
        rows = [PostingSpec(term, rc, p.entries) for (term, rc), p in table.semantic.items()]
        return synthesize_fixture(rows, graph, spec.n_docs)
    return load_collection(path)


def query_reference_concept(graph: ConceptGraph, query) -> Optional[str]:
    if query.model == "boolean":
        return query_rc(graph, parse_boolean(query.text))
    return resolve_rc(graph, pipeline(query.text))


def derive_qrels(index: IndexPair, graph: ConceptGraph, queries: Iterable) -> dict:
    """A document is relevant when one of its phrases carries the query's rc."""
    qrels = {}
    for q in queries:
        qrels[q.query_id] = frozenset(index.docs_carrying(query_reference_concept(graph, q)))
    return qrels


@lru_cache(maxsize=None)
def load_fixture(name: str) -> Fixture:
    spec = _spec(name)
    graph = load_ontology(data_path(spec.ontology))
    collection = build_collection(name, graph)
    index = build_index(collection, graph)
    queries = tuple(load_queries(data_path(spec.queries)))
    return Fixture(name, graph, collection, index, queries, load_qrels(qrels_file(name)))


def materialize(out_dir, names: Optional[Iterable[str]] = None) -> list:
    """Write each fixture into ``out_dir/<name>/``; return the directories."""
    out = Path(out_dir)
    written = []
    for name in names or sorted(FIXTURES):
        fx = load_fixture(name)
        target = out / name
        target.mkdir(parents=True, exist_ok=True)
        save_collection(fx.collection, target / "corpus.jsonl")
        save_ontology(fx.graph, target / "ontology.tsv")
        save_index(fx.index, target / "index.idx")
        save_qrels(fx.qrels, target / "qrels.tsv")
        (target / "queries.tsv").write_bytes(data_path(_spec(name).queries).read_bytes())
        config = {
            "corpus": "corpus.jsonl",
            "ontology": "ontology.tsv",
            "index": "index.idx",
            "queries": "queries.tsv",
            "qrels": "qrels.tsv",
            "hops": fx.hops,
            "topk": 10,
        }
        (target / "config.json").write_text(json.dumps(config, indent=2) + "\n", encoding="utf-8")
        written.append(target)
    return written


def regenerate(names: Optional[Iterable[str]] = None) -> None:
    """Rewrite the shipped qrels and golden index files from the sources."""
    for name in names or sorted(FIXTURES):
        spec = _spec(name)
        graph = load_ontology(data_path(spec.ontology))
        index = build_index(build_collection(name, graph), graph)
        queries = load_queries(data_path(spec.queries))
        save_qrels(derive_qrels(index, graph, queries), qrels_file(name))
        save_index(index, golden_index_file(name))
    load_fixture.cache_clear()
