"""Shared fixtures: the spec'd demo lexicon, the bundled synthetic corpus,
and helpers for building random annotated records."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from tweetfilter.annotate import annotate_corpus
from tweetfilter.bots import OfflineBotProvider
from tweetfilter.ingest import merge, normalize_all, parse_corpus
from tweetfilter.records import (
    BOT_THRESHOLD,
    Category,
    Corpus,
    HateSubtype,
    Language,
    SentimentLabel,
    SourceTag,
    TweetRecord,
)
from tweetfilter.sentiment import SentimentLexicon, builtin_lexicon

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURES_DIR = REPO_ROOT / "fixtures"
HATE_FIXTURE = FIXTURES_DIR / "hate_tweets.jsonl"
MISINFO_FIXTURE = FIXTURES_DIR / "misinfo_tweets.csv"


@pytest.fixture
def demo_lexicon() -> SentimentLexicon:
    """Three-word lexicon with the documented example valences."""
    return SentimentLexicon(
        {"good": 1.9, "bad": -2.5, "great": 3.1},
        negators=frozenset({"not", "never", "no"}),
        boosters=frozenset({"very", "extremely"}),
    )


def load_fixture_corpus() -> Corpus:
    """Parse, normalize, annotate and merge both bundled fixture files."""
    records = []
    for path, fmt, tag in (
        (HATE_FIXTURE, "jsonl", SourceTag.HATE),
        (MISINFO_FIXTURE, "csv", SourceTag.MISINFO),
    ):
        parsed = parse_corpus(path.read_bytes(), fmt, tag)
        assert not parsed.rejects, f"fixture {path} must parse cleanly"
        normalized, rejects = normalize_all(parsed, tag)
        assert not rejects, f"fixture {path} must normalize cleanly"
        records.extend(normalized)
    return annotate_corpus(merge(records), builtin_lexicon(), OfflineBotProvider())


@pytest.fixture(scope="session")
def fixture_corpus() -> Corpus:
    return load_fixture_corpus()


def make_record(
    record_id: str,
    category: Category = Category.NORMAL,
    is_bot: bool = False,
    verified: bool = False,
    sentiment: SentimentLabel = SentimentLabel.NEUTRAL,
    language: Language = Language.EN,
    text: str = "some text",
) -> TweetRecord:
    """Hand-built annotated record with consistent invariants."""
    return TweetRecord(
        id=record_id,
        text=text,
        source=SourceTag.MISINFO if category == Category.MISINFORMATION else SourceTag.HATE,
        category=category,
        hate_subtype=HateSubtype.RACISM if category == Category.HATE_SPEECH else HateSubtype.NONE,
        fact_check_url="https://factcheck.example/x" if category == Category.MISINFORMATION else None,
        verified=verified,
        language=language,
        sentiment_compound={"positive": 0.5, "neutral": 0.0, "negative": -0.5}[sentiment.value],
        sentiment_label=sentiment,
        bot_score=0.9 if is_bot else 0.1,
        is_bot=is_bot,
    )


def random_corpus(rng: random.Random, size: int) -> Corpus:
    """Random annotated corpus covering every attribute combination."""
    compound_ranges = {
        SentimentLabel.POSITIVE: (0.05, 0.99),
        SentimentLabel.NEUTRAL: (-0.049, 0.049),
        SentimentLabel.NEGATIVE: (-0.99, -0.05),
    }
    records = []
    for i in range(size):
        bot_score = rng.random()
        category = rng.choice(list(Category))
        label = rng.choice(list(SentimentLabel))
        records.append(
            TweetRecord(
                id=f"r:{i}",
                text=f"synthetic text {i}",
                source=rng.choice(list(SourceTag)),
                category=category,
                hate_subtype=(
                    rng.choice([HateSubtype.RACISM, HateSubtype.SEXISM])
                    if category == Category.HATE_SPEECH
                    else HateSubtype.NONE
                ),
                fact_check_url=(
                    f"https://factcheck.example/{i}" if category == Category.MISINFORMATION else None
                ),
                verified=rng.random() < 0.5,
                language=rng.choice(list(Language)),
                sentiment_compound=rng.uniform(*compound_ranges[label]),
                sentiment_label=label,
                bot_score=bot_score,
                is_bot=bot_score >= BOT_THRESHOLD,
            )
        )
    return Corpus(records=records)
