"""Tri-state filter queries, per-record matching, and result pages.

A query is a conjunction of per-attribute predicates: each boolean
attribute (hate, misinformation, bot, verified) has a tri-state selector
(any = ignore, yes = require, no = exclude); sentiment and language are
exact-match selectors with an "any" wildcard. Requiring hate speech and
misinformation at once is rejected: records carry exactly one harm
category, so the combination can never match and is treated as user error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import TweetFilterError
from .records import Category, TweetRecord


class TriState(str, Enum):
    ANY = "any"
    YES = "yes"
    NO = "no"


SENTIMENT_CHOICES = ("any", "positive", "neutral", "negative")
LANGUAGE_CHOICES = ("any", "en", "es")
DEFAULT_PAGE_SIZE = 20
MAX_PAGE_SIZE = 100


@dataclass(frozen=True)
class FilterQuery:
    """Field defaults are the documented UI defaults: boolean selectors
    exclude their attribute, categorical selectors are wildcards."""

    hate: TriState = TriState.NO
    misinformation: TriState = TriState.NO
    bot: TriState = TriState.NO
    verified: TriState = TriState.NO
    sentiment: str = "any"
    language: str = "any"
    page: int = 1
    page_size: int = DEFAULT_PAGE_SIZE


def validate_filter(q: FilterQuery) -> None:
    """Raise with the registry code for the first violated constraint."""
    for name in ("hate", "misinformation", "bot", "verified"):
        value = getattr(q, name)
        if not isinstance(value, TriState):
            raise TweetFilterError("INVALID_FILTER_VALUE", f"{name} must be any|yes|no, got {value!r}")
    if q.sentiment not in SENTIMENT_CHOICES:
        raise TweetFilterError(
            "INVALID_FILTER_VALUE",
            f"sentiment must be one of {'|'.join(SENTIMENT_CHOICES)}, got {q.sentiment!r}",
        )
    if q.language not in LANGUAGE_CHOICES:
        raise TweetFilterError(
            "INVALID_FILTER_VALUE",
            f"language must be one of {'|'.join(LANGUAGE_CHOICES)}, got {q.language!r}",
        )
    if not isinstance(q.page, int) or isinstance(q.page, bool) or q.page < 1:
        raise TweetFilterError("INVALID_PAGINATION", f"page must be an integer >= 1, got {q.page!r}")
    if not isinstance(q.page_size, int) or isinstance(q.page_size, bool) or not 1 <= q.page_size <= MAX_PAGE_SIZE:
        raise TweetFilterError(
            "INVALID_PAGINATION", f"page_size must be in [1, {MAX_PAGE_SIZE}], got {q.page_size!r}"
        )
    if q.hate == TriState.YES and q.misinformation == TriState.YES:
        raise TweetFilterError(
            "MUTUALLY_EXCLUSIVE_FILTERS",
            "hate and misinformation cannot both be required: records carry exactly one harm category",
        )


def _tri_match(selector: TriState, attribute: bool) -> bool:
    if selector == TriState.ANY:
        return True
    return attribute == (selector == TriState.YES)


def matches(record: TweetRecord, q: FilterQuery) -> bool:
    """Scalar reference predicate; the columnar kernel must agree with it."""
    if not _tri_match(q.hate, record.category == Category.HATE_SPEECH):
        return False
    if not _tri_match(q.misinformation, record.category == Category.MISINFORMATION):
        return False
    if not _tri_match(q.bot, record.is_bot):
        return False
    if not _tri_match(q.verified, record.verified):
        return False
    if q.sentiment != "any" and record.sentiment_label.value != q.sentiment:
        return False
    if q.language != "any" and record.language.value != q.language:
        return False
    return True


@dataclass(frozen=True)
class MetaInfo:
    """The pop-up projection of one record: seven attribute groups, plus the
    fact-check link when the record is misinformation."""

    tweet_id: str
    bot: bool
    bot_score: float
    hate_speech: bool
    hate_subtype: str
    misinformation: bool
    fact_check_url: str | None
    verified: bool
    sentiment: str
    sentiment_compound: float
    category: str
    language: str

    @classmethod
    def from_record(cls, record: TweetRecord) -> "MetaInfo":
        return cls(
            tweet_id=record.id,
            bot=record.is_bot,
            bot_score=record.bot_score,
            hate_speech=record.category == Category.HATE_SPEECH,
            hate_subtype=record.hate_subtype.value,
            misinformation=record.category == Category.MISINFORMATION,
            fact_check_url=record.fact_check_url,
            verified=record.verified,
            sentiment=record.sentiment_label.value,
            sentiment_compound=record.sentiment_compound,
            category=record.category.value,
            language=record.language.value,
        )

    def to_json_dict(self) -> dict:
        out = {
            "tweet_id": self.tweet_id,
            "bot": self.bot,
            "bot_score": self.bot_score,
            "hate_speech": self.hate_speech,
            "hate_subtype": self.hate_subtype,
            "misinformation": self.misinformation,
            "verified": self.verified,
            "sentiment": self.sentiment,
            "sentiment_compound": self.sentiment_compound,
            "category": self.category,
            "language": self.language,
        }
        if self.misinformation:
            out["fact_check_url"] = self.fact_check_url
        return out


@dataclass(frozen=True)
class Page:
    items: list[TweetRecord] = field(default_factory=list)
    page: int = 1
    page_size: int = DEFAULT_PAGE_SIZE
    total_matching: int = 0

    def to_json_dict(self, query: FilterQuery | None = None) -> dict:
        out = {
            "items": [r.to_public_dict() for r in self.items],
            "page": self.page,
            "page_size": self.page_size,
            "total_matching": self.total_matching,
        }
        if query is not None:
            out["filters"] = {
                "hate": query.hate.value,
                "misinformation": query.misinformation.value,
                "bot": query.bot.value,
                "verified": query.verified.value,
                "sentiment": query.sentiment,
                "language": query.language,
            }
        return out
