"""Turning raw words into index terms.

Normalization, stop-word removal and rule-based stemming for English and
Arabic. Every function here is pure; stop-word lists are immutable once
loaded.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import Phrase, split_words

STOPWORDS_ENV = "CONCEPT_IR_STOPWORDS_DIR"
LANGUAGES = ("auto", "en", "ar")

_ARABIC_RANGE = re.compile("[؀-ۿݐ-ݿﭐ-﷿ﹰ-﻿]")
_ARABIC_DIACRITICS = re.compile("[ً-ْٰ]")
_TATWEEL = "ـ"
_LETTER_FOLD = str.maketrans({
    "أ": "ا",
    "إ": "ا",
    "آ": "ا",
    "ٱ": "ا",
    "ى": "ي",
    "ؤ": "و",
    "ئ": "ي",
})

# longest first; first match wins
_AR_ARTICLES = ("وال", "بال", "كال", "فال", "ال", "لل")
_AR_SUFFIXES = ("ات", "ون", "ين", "ها", "ان", "ة", "ي")
_VOWELS = set("aeiou")


def is_arabic(word: str) -> bool:
    return bool(_ARABIC_RANGE.search(word))


def normalize(word: str) -> str:
    """Pre-stem normal form: lowercase Latin; strip Arabic marks and fold letters."""
    if is_arabic(word):
        word = _ARABIC_DIACRITICS.sub("", word).replace(_TATWEEL, "")
        return word.translate(_LETTER_FOLD)
    return word.lower()


@dataclass(frozen=True)
class StopWordList:
    language: str
    words: frozenset

    def __contains__(self, word: str) -> bool:
        return word in self.words

    @classmethod
    def from_lines(cls, language: str, lines: Iterable[str]) -> "StopWordList":
        words = set()
        for line in lines:
            line = line.split("#", 1)[0].strip()
            if line:
                words.add(normalize(line))
        return cls(language, frozenset(words))

    @classmethod
    def from_file(cls, language: str, path) -> "StopWordList":
        with open(Path(path), encoding="utf-8") as fh:
            return cls.from_lines(language, fh)


@lru_cache(maxsize=None)
def default_stopwords(language: str) -> StopWordList:
    """Built-in list for ``language``, or ``$CONCEPT_IR_STOPWORDS_DIR/<lang>.txt``."""
    override = os.environ.get(STOPWORDS_ENV)
    if override:
        path = Path(override) / f"{language}.txt"
        if path.is_file():
            return StopWordList.from_file(language, path)
    text = resources.files("concept_ir.resources").joinpath(f"{language}.txt").read_text("utf-8")
    return StopWordList.from_lines(language, text.splitlines())


class StopWords:
    """Per-script stop-word lookup: each word is checked against its own script's list."""

    def __init__(self, english: StopWordList | None = None, arabic: StopWordList | None = None):
        self.english = english if english is not None else default_stopwords("en")
        self.arabic = arabic if arabic is not None else default_stopwords("ar")

    def __contains__(self, word: str) -> bool:
        return word in (self.arabic if is_arabic(word) else self.english)

    @classmethod
    def from_paths(cls, paths: Sequence) -> "StopWords":
        """Load user lists; a file is treated as Arabic when its entries are Arabic."""
        english = arabic = None
        for path in paths:
            with open(Path(path), encoding="utf-8") as fh:
                lines = fh.read().splitlines()
            entries = [ln.split("#", 1)[0].strip() for ln in lines]
            entries = [e for e in entries if e]
            if entries and sum(map(is_arabic, entries)) * 2 >= len(entries):
                arabic = StopWordList.from_lines("ar", entries)
            else:
                english = StopWordList.from_lines("en", entries)
        return cls(english, arabic)


@lru_cache(maxsize=1)
def _default_stopwords() -> StopWords:
    return StopWords()


def remove_stop_words(words: Sequence[str], stopwords: StopWords | None = None) -> list[str]:
    stopwords = stopwords or _default_stopwords()
    return [w for w in words if normalize(w) not in stopwords]


def _is_consonant(ch: str) -> bool:
    return ch.isalpha() and ch not in _VOWELS


def stem_english(word: str) -> str:
    """Basic suffix stripping; at most one ending rule fires.

    The ``ies`` transform is tested before the generic ``es`` rule, otherwise
    "flies" would stop at "flie".
    """
    if word.endswith("ies") and not word.endswith(("eies", "aies")) and len(word) > 3:
        return word[:-3] + "y"
    if word.endswith("es") and len(word) > 2:
        return word[:-1]
    if len(word) > 2 and word[-1] == "s" and word[-2] != "s" and _is_consonant(word[-2]):
        return word[:-1]
    if word.endswith("ing"):
        rest = word[:-3]
        if len(rest) > 1 and rest != "th":
            return rest
        return word
    if word.endswith("ed") and len(word) > 3 and _is_consonant(word[-3]):
        return word[:-2]
    return word


def stem_arabic(word: str) -> str:
    """Light stemmer, repeated until the word stops changing.

    Each pass strips one article prefix (or conjunction waw) and one suffix.
    Repeating makes the stem a fixed point: تلفزيون -> تلفزي -> تلفز.
    """
    word = normalize(word)
    while True:
        stemmed = _stem_arabic_once(word)
        if stemmed == word:
            return word
        word = stemmed


def _stem_arabic_once(word: str) -> str:
    for prefix in _AR_ARTICLES:
        if word.startswith(prefix) and len(word) - len(prefix) >= 2:
            word = word[len(prefix):]
            break
    else:
        if word.startswith("و") and len(word) - 1 >= 3:
            word = word[1:]
    for suffix in _AR_SUFFIXES:
        if word.endswith(suffix) and len(word) - len(suffix) >= 3:
            word = word[: -len(suffix)]
            # fa'ila nouns fold onto their broken plural: مدينة -> مدن
            if suffix == "ة" and len(word) == 4 and word[2] == "ي":
                word = word[:2] + word[3]
            break
    return word


def stem(word: str) -> str:
    """Stem an already-normalized word with its own script's stemmer."""
    return stem_arabic(word) if is_arabic(word) else stem_english(word)


def pipeline(
    phrase: Phrase | str | Sequence[str],
    language: str = "auto",
    stopwords: StopWords | None = None,
) -> list[str]:
    """normalize -> remove stop words -> stem. Returns the phrase's index terms.

    ``language`` is a hint only: stemming always follows each word's script,
    so mixed-script phrases work.
    """
    if language not in LANGUAGES:
        raise ValueError(f"unknown language {language!r}; expected one of {LANGUAGES}")
    if isinstance(phrase, Phrase):
        words = phrase.words
    elif isinstance(phrase, str):
        words = split_words(phrase)
    else:
        words = phrase
    stopwords = stopwords or _default_stopwords()
    terms = []
    for w in words:
        norm = normalize(w)
        if not norm or norm in stopwords:
            continue
        term = stem(norm)
        if term and term not in stopwords:
            terms.append(term)
    return terms
