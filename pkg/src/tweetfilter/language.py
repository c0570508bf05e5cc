"""Stopword-count language identification for English vs Spanish.

The detector counts case-insensitive stopword hits per language and picks
the strictly larger side; zero hits on both sides means unknown, a nonzero
tie goes to English (documented tie-break). An upstream language hint of
"en" or "es" wins over detection.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .records import Language
from .sentiment import clean_token

MIN_STOPWORDS = 20


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stopword file: one word per line, # comments allowed."""
    words = set()
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            word = line.strip().lower()
            if word and not word.startswith("#"):
                words.add(word)
    if len(words) < MIN_STOPWORDS:
        raise ValueError(f"{path}: stopword set needs at least {MIN_STOPWORDS} words, got {len(words)}")
    return frozenset(words)


def _builtin(name: str) -> frozenset[str]:
    text = resources.files("tweetfilter").joinpath(f"data/{name}").read_text("utf-8")
    return frozenset(w.strip().lower() for w in text.splitlines() if w.strip() and not w.startswith("#"))


STOPWORDS_EN = _builtin("stopwords_en.txt")
STOPWORDS_ES = _builtin("stopwords_es.txt")


def count_stopword_hits(text: str, stopwords: frozenset[str]) -> int:
    return sum(1 for word in text.split() if clean_token(word) in stopwords)


def detect_language(
    text: str,
    hint: str | None = None,
    en_words: frozenset[str] = STOPWORDS_EN,
    es_words: frozenset[str] = STOPWORDS_ES,
) -> Language:
    if hint in (Language.EN.value, Language.ES.value):
        return Language(hint)
    en_hits = count_stopword_hits(text, en_words)
    es_hits = count_stopword_hits(text, es_words)
    if en_hits == 0 and es_hits == 0:
        return Language.UNKNOWN
    if es_hits > en_hits:
        return Language.ES
    return Language.EN
