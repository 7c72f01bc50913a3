"""Document collections: loading JSON-lines corpora and phrase segmentation."""

from __future__ import annotations

import json
import re
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .errors import DuplicateDocId, EmptyCollection, ParseError

# sentence-final marks: . ! ? Arabic question mark, Urdu full stop, newline
PHRASE_DELIMITERS = ".!?؟۔\n"
_PHRASE_SPLIT = re.compile("[" + re.escape(PHRASE_DELIMITERS) + "]")


@dataclass(frozen=True)
class Phrase:
    words: tuple[str, ...]

    def text(self) -> str:
        return " ".join(self.words)


@dataclass(frozen=True)
class Document:
    doc_id: int
    text: str
    phrases: tuple[Phrase, ...] = field(default=())

    @classmethod
    def from_text(cls, doc_id: int, text: str) -> "Document":
        return cls(doc_id, text, tuple(segment_phrases(text)))


@dataclass(frozen=True)
class Collection:
    documents: tuple[Document, ...]

    @property
    def n_docs(self) -> int:
        return len(self.documents)

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, str]]) -> "Collection":
        """Build a collection from ``(doc_id, text)`` pairs, checking ids."""
        docs = []
        seen = set()
        for doc_id, text in pairs:
            if isinstance(doc_id, bool) or not isinstance(doc_id, int) or doc_id <= 0:
                raise ParseError(f"doc id must be a positive integer, got {doc_id!r}")
            if doc_id in seen:
                raise DuplicateDocId(f"duplicate doc id {doc_id}")
            seen.add(doc_id)
            docs.append(Document.from_text(doc_id, text))
        return cls(tuple(docs))


def _is_word_separator(ch: str) -> bool:
    if ch.isspace():
        return True
    # punctuation, symbols and separators; Arabic letters and marks are L*/M*
    return unicodedata.category(ch)[0] in "PSZ"


def split_words(text: str) -> list[str]:
    """Split on whitespace and punctuation; every word is a substring of ``text``."""
    words = []
    start = None
    for i, ch in enumerate(text):
        if _is_word_separator(ch):
            if start is not None:
                words.append(text[start:i])
                start = None
        elif start is None:
            start = i
    if start is not None:
        words.append(text[start:])
    return words


def segment_phrases(text: str) -> list[Phrase]:
    phrases = []
    for chunk in _PHRASE_SPLIT.split(text):
        words = split_words(chunk)
        if words:
            phrases.append(Phrase(tuple(words)))
    return phrases


def load_collection(path) -> Collection:
    """Read a JSON-lines corpus with one ``{"id": int, "text": str}`` per line."""
    pairs = []
    with open(Path(path), encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON ({exc.msg})", lineno) from None
            if not isinstance(obj, dict) or "id" not in obj or "text" not in obj:
                raise ParseError("expected an object with 'id' and 'text'", lineno)
            doc_id, text = obj["id"], obj["text"]
            if isinstance(doc_id, bool) or not isinstance(doc_id, int) or doc_id <= 0:
                raise ParseError(f"'id' must be a positive integer, got {doc_id!r}", lineno)
            if not isinstance(text, str):
                raise ParseError("'text' must be a string", lineno)
            pairs.append((doc_id, text))
    if not pairs:
        raise EmptyCollection(f"{path}: no documents")
    return Collection.from_pairs(pairs)


def save_collection(collection: Collection, path) -> None:
    with open(Path(path), "w", encoding="utf-8", newline="\n") as fh:
        for doc in collection:
            fh.write(json.dumps({"id": doc.doc_id, "text": doc.text}, ensure_ascii=False))
            fh.write("\n")
