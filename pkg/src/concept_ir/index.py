"""Traditional and semantic inverted indexes.

Every phrase of every document is run through the text pipeline, its terms
are annotated with the phrase's Reference Concept, and each term occurrence
is counted twice: once under the term alone (traditional index) and once
under the ``(term, rc)`` pair (semantic index). Summed over rc values, the
semantic postings of a term reproduce its traditional posting exactly.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

from .corpus import Collection
from .errors import InfeasibleSpec, ParseError, VersionMismatch
from .ontology import UNKNOWN, ConceptGraph, ReferenceConcept, resolve_rc
from .textpipe import StopWords, pipeline

FORMAT_MAGIC = "CIRIDX"
FORMAT_VERSION = "v1"
UNKNOWN_TOKEN = "?"
_HEADER = re.compile(r"^CIRIDX v1 N=(\d+)$")


@dataclass(frozen=True)
class Posting:
    term: str
    entries: tuple  # ((doc_id, tf), ...) ascending by doc_id

    @property
    def df(self) -> int:
        return len(self.entries)

    @property
    def doc_ids(self) -> list:
        return [d for d, _ in self.entries]

    def tf(self, doc_id: int) -> int:
        return dict(self.entries).get(doc_id, 0)


@dataclass(frozen=True)
class SemanticPosting(Posting):
    rc: ReferenceConcept = UNKNOWN


def _make_entries(counts: Mapping[int, int]) -> tuple:
    return tuple(sorted((d, tf) for d, tf in counts.items() if tf > 0))


@dataclass(eq=False)
class IndexPair:
    traditional: dict  # term -> Posting
    semantic: dict  # (term, rc) -> SemanticPosting
    n_docs: int
    _by_term: dict = field(init=False, repr=False)

    def __post_init__(self):
        by_term: dict = defaultdict(dict)
        for (term, rc), posting in self.semantic.items():
            by_term[term][rc] = posting
        self._by_term = dict(by_term)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndexPair):
            return NotImplemented
        return (
            self.n_docs == other.n_docs
            and self.traditional == other.traditional
            and self.semantic == other.semantic
        )

    @classmethod
    def from_semantic(cls, semantic: Mapping, n_docs: int) -> "IndexPair":
        """Derive the traditional index from semantic postings (partition law)."""
        counts: dict = defaultdict(lambda: defaultdict(int))
        for (term, _), posting in semantic.items():
            for doc_id, tf in posting.entries:
                counts[term][doc_id] += tf
        traditional = {t: Posting(t, _make_entries(c)) for t, c in counts.items()}
        return cls(traditional, dict(semantic), n_docs)

    def posting(self, term: str) -> Optional[Posting]:
        return self.traditional.get(term)

    def senses_of(self, term: str) -> dict:
        """rc -> SemanticPosting for every rc the term was indexed under."""
        return self._by_term.get(term, {})

    def docs_carrying(self, rc: ReferenceConcept) -> list:
        """Documents having at least one phrase annotated with ``rc``."""
        docs = set()
        for (_, key_rc), posting in self.semantic.items():
            if key_rc == rc:
                docs.update(posting.doc_ids)
        return sorted(docs)

    @cached_property
    def term_count(self) -> int:
        return sum(tf for p in self.traditional.values() for _, tf in p.entries)


def build_index(
    collection: Collection,
    graph: Optional[ConceptGraph] = None,
    language: str = "auto",
    stopwords: Optional[StopWords] = None,
) -> IndexPair:
    """Build both indexes in one pass over the collection.

    Without a graph every phrase gets the UNKNOWN rc, so the semantic index
    degenerates to the traditional one.
    """
    counts: dict = defaultdict(lambda: defaultdict(int))
    for doc in collection:
        for phrase in doc.phrases:
            terms = pipeline(phrase, language, stopwords)
            if not terms:
                continue
            rc = resolve_rc(graph, terms) if graph is not None else UNKNOWN
            for term in terms:
                counts[(term, rc)][doc.doc_id] += 1
    semantic = {
        key: SemanticPosting(key[0], _make_entries(c), key[1]) for key, c in counts.items()
    }
    return IndexPair.from_semantic(semantic, collection.n_docs)


def _rc_sort_key(rc: ReferenceConcept) -> str:
    return UNKNOWN_TOKEN if rc is UNKNOWN else rc


def save_index(ix: IndexPair, path) -> None:
    """Write the line-oriented index format.

    Header ``CIRIDX v1 N=<n>``, then ``term<TAB>rc<TAB>doc:tf,...`` per
    semantic posting, sorted so output is byte-stable.
    """
    lines = [f"{FORMAT_MAGIC} {FORMAT_VERSION} N={ix.n_docs}"]
    for key in sorted(ix.semantic, key=lambda k: (k[0], _rc_sort_key(k[1]))):
        posting = ix.semantic[key]
        entries = ",".join(f"{d}:{tf}" for d, tf in posting.entries)
        lines.append(f"{key[0]}\t{_rc_sort_key(key[1])}\t{entries}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_index(path) -> IndexPair:
    with open(Path(path), encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        m = _HEADER.match(header)
        if not m:
            if header.startswith(FORMAT_MAGIC + " "):
                raise VersionMismatch(f"unsupported index version: {header!r}")
            raise VersionMismatch(f"not a {FORMAT_MAGIC} index file: {header[:40]!r}")
        n_docs = int(m.group(1))
        semantic = {}
        for lineno, raw in enumerate(fh, start=2):
            line = raw.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 3 or not parts[0]:
                raise ParseError("expected term<TAB>rc<TAB>postings", lineno)
            term, rc_text, body = parts
            rc = UNKNOWN if rc_text == UNKNOWN_TOKEN else rc_text
            counts = {}
            try:
                for item in body.split(","):
                    d, tf = item.split(":")
                    counts[int(d)] = int(tf)
            except ValueError:
                raise ParseError(f"malformed posting list {body!r}", lineno) from None
            entries = _make_entries(counts)
            if len(entries) != len(counts) or any(tf <= 0 or d <= 0 for d, tf in counts.items()):
                raise ParseError("doc ids and tf values must be positive", lineno)
            if (term, rc) in semantic:
                raise ParseError(f"duplicate posting for {(term, rc_text)}", lineno)
            semantic[(term, rc)] = SemanticPosting(term, entries, rc)
    return IndexPair.from_semantic(semantic, n_docs)


@dataclass(frozen=True)
class PostingSpec:
    """One row of a posting table: a term under one rc, with its (doc, tf) entries."""

    term: str
    rc: ReferenceConcept
    entries: tuple


def _pick_anchor(
    graph: ConceptGraph,
    terms: Sequence[str],
    rc: ReferenceConcept,
    vocabulary: set,
    language: str,
) -> Optional[str]:
    # anchors whose own sense is the target come first
    direct = sorted(t for t, s in graph.term_senses.items() if rc in s)
    rest = sorted(t for t in graph.term_senses if t not in set(direct))
    for anchor in direct + rest:
        if anchor in vocabulary or pipeline([anchor], language) != [anchor]:
            continue
        if resolve_rc(graph, list(terms) + [anchor]) == rc:
            return anchor
    return None


def synthesize_fixture(
    specs: Iterable[PostingSpec],
    graph: Optional[ConceptGraph] = None,
    n_docs: Optional[int] = None,
    language: str = "auto",
) -> Collection:
    """Generate documents whose index reproduces the given posting tables.

    Each document gets one phrase per rc it carries; the phrase repeats every
    term tf times. When the terms alone do not resolve to the wanted rc, an
    anchor word from the ontology is added to the phrase. Anchor words never
    collide with table vocabulary, so the tabled postings come out exact.
    """
    specs = list(specs)
    vocabulary = {s.term for s in specs}
    for term in sorted(vocabulary):
        if pipeline([term], language) != [term]:
            raise InfeasibleSpec(f"term {term!r} is not a fixed point of the text pipeline")

    groups: dict = defaultdict(lambda: defaultdict(int))
    seen = set()
    max_doc = 0
    for spec in specs:
        if (spec.term, spec.rc) in seen:
            raise InfeasibleSpec(f"duplicate table row for {(spec.term, spec.rc)}")
        seen.add((spec.term, spec.rc))
        for doc_id, tf in spec.entries:
            if doc_id <= 0 or tf <= 0:
                raise InfeasibleSpec(f"bad entry ({doc_id}, {tf}) for {spec.term!r}")
            if spec.term in groups[(doc_id, spec.rc)]:
                raise InfeasibleSpec(f"doc {doc_id} listed twice for {(spec.term, spec.rc)}")
            groups[(doc_id, spec.rc)][spec.term] = tf
            max_doc = max(max_doc, doc_id)
    n_docs = max_doc if n_docs is None else n_docs
    if max_doc > n_docs:
        raise InfeasibleSpec(f"doc id {max_doc} exceeds n_docs={n_docs}")

    phrases: dict = defaultdict(list)
    for (doc_id, rc), tfs in sorted(groups.items(), key=lambda kv: (kv[0][0], _rc_sort_key(kv[0][1]))):
        terms = sorted(tfs)
        words = [t for t in terms for _ in range(tfs[t])]
        if rc is UNKNOWN:
            if graph is not None and any(graph.senses(t) for t in terms):
                raise InfeasibleSpec(f"doc {doc_id}: {terms} have senses, cannot be UNKNOWN")
        else:
            if graph is None or rc not in graph:
                raise InfeasibleSpec(f"rc {rc!r} is not a node of the ontology")
            if resolve_rc(graph, terms) != rc:
                anchor = _pick_anchor(graph, terms, rc, vocabulary, language)
                if anchor is None:
                    raise InfeasibleSpec(f"doc {doc_id}: no anchor makes {terms} resolve to {rc!r}")
                words.append(anchor)
        phrases[doc_id].append(" ".join(words))
    return Collection.from_pairs(
        (doc_id, ". ".join(phrases.get(doc_id, []))) for doc_id in range(1, n_docs + 1)
    )
