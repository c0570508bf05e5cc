"""Meta-information annotation: sentiment, language, bot score.

Annotation is a pure function of (record, lexicon, provider): running it
twice reproduces the same record, and per-record provider failures degrade
to a flagged bot_score of 0 instead of aborting the corpus.
"""

from __future__ import annotations

from .bots import BotProvider, clamp_score, score_bot
from .errors import TweetFilterError
from .records import BOT_THRESHOLD, Corpus, TweetRecord
from .sentiment import SentimentLexicon, score_text
from .language import STOPWORDS_EN, STOPWORDS_ES, detect_language


def annotate_record(
    record: TweetRecord,
    lexicon: SentimentLexicon,
    provider: BotProvider,
    en_words: frozenset[str] = STOPWORDS_EN,
    es_words: frozenset[str] = STOPWORDS_ES,
) -> TweetRecord:
    """Fill sentiment, language and bot fields; everything else unchanged.

    A dataset-supplied bot score (carried as source_bot_score) wins over the
    provider, which keeps offline corpus builds reproducible.
    """
    sentiment = score_text(record.text, lexicon)
    language = detect_language(record.text, hint=record.language_hint, en_words=en_words, es_words=es_words)

    if record.source_bot_score is not None:
        bot_score = clamp_score(record.source_bot_score)
        is_bot = bot_score >= BOT_THRESHOLD
        unscored = False
    else:
        try:
            bot_score, is_bot = score_bot(record.id, provider)
            unscored = False
        except TweetFilterError as exc:
            if exc.code != "PROVIDER_UNAVAILABLE":
                raise
            bot_score, is_bot, unscored = 0.0, False, True

    return record.with_annotations(
        sentiment_compound=sentiment.compound,
        sentiment_label=sentiment.label,
        language=language,
        bot_score=bot_score,
        is_bot=is_bot,
        bot_unscored=unscored,
    )


def annotate_corpus(
    corpus: Corpus,
    lexicon: SentimentLexicon,
    provider: BotProvider,
    en_words: frozenset[str] = STOPWORDS_EN,
    es_words: frozenset[str] = STOPWORDS_ES,
) -> Corpus:
    """Annotate every record, preserving order and per-source counts."""
    return Corpus(
        records=[annotate_record(r, lexicon, provider, en_words, es_words) for r in corpus.records]
    )
