"""Canonical record types and the JSONL interchange format.

RawRecord is the common denominator of the two labeled source datasets;
TweetRecord is the fully annotated post the rest of the system works with.
The canonical corpus export is one TweetRecord JSON object per line, UTF-8,
LF line endings; re-parsing an export reproduces an equal Corpus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import IO

BOT_THRESHOLD = 0.5


class SourceTag(str, Enum):
    HATE = "hate"
    MISINFO = "misinfo"


class Category(str, Enum):
    HATE_SPEECH = "hate_speech"
    MISINFORMATION = "misinformation"
    NORMAL = "normal"


class HateSubtype(str, Enum):
    RACISM = "racism"
    SEXISM = "sexism"
    NONE = "none"


class SentimentLabel(str, Enum):
    POSITIVE = "positive"
    NEUTRAL = "neutral"
    NEGATIVE = "negative"


class Language(str, Enum):
    EN = "en"
    ES = "es"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class RawRecord:
    """One row of a source dataset, before label mapping."""

    source_id: str
    text: str
    label: str
    fact_check_url: str | None = None
    verified: bool | None = None
    bot_score: float | None = None
    language_hint: str | None = None

    def problems(self) -> list[str]:
        """Invariant violations, empty when the record is well-formed."""
        issues = []
        if not isinstance(self.source_id, str) or not self.source_id:
            issues.append("source_id is empty")
        if not isinstance(self.text, str) or not self.text.strip():
            issues.append("text is empty after trimming")
        if not isinstance(self.label, str) or not self.label:
            issues.append("label is missing")
        if self.bot_score is not None and not (0.0 <= self.bot_score <= 1.0):
            issues.append(f"bot_score {self.bot_score} outside [0,1]")
        return issues


@dataclass(frozen=True)
class TweetRecord:
    """Annotated post. Fields after `is_bot` are pipeline bookkeeping:
    they ride along in the JSONL export but stay out of the public API."""

    id: str
    text: str
    source: SourceTag
    category: Category
    hate_subtype: HateSubtype
    fact_check_url: str | None
    verified: bool
    language: Language
    sentiment_compound: float
    sentiment_label: SentimentLabel
    bot_score: float
    is_bot: bool
    language_hint: str | None = None
    source_bot_score: float | None = None
    bot_unscored: bool = False

    def problems(self) -> list[str]:
        issues = []
        if self.hate_subtype != HateSubtype.NONE and self.category != Category.HATE_SPEECH:
            issues.append("hate_subtype set on a non-hate record")
        if (self.fact_check_url is not None) != (self.category == Category.MISINFORMATION):
            issues.append("fact_check_url present iff category=misinformation violated")
        if not -1.0 <= self.sentiment_compound <= 1.0:
            issues.append("sentiment_compound outside [-1,1]")
        if not 0.0 <= self.bot_score <= 1.0:
            issues.append("bot_score outside [0,1]")
        if self.is_bot != (self.bot_score >= BOT_THRESHOLD):
            issues.append("is_bot inconsistent with bot_score threshold")
        return issues

    def to_json_dict(self) -> dict:
        """Full serialization for the canonical JSONL export (round-trips)."""
        out = {
            "id": self.id,
            "text": self.text,
            "source": self.source.value,
            "category": self.category.value,
            "hate_subtype": self.hate_subtype.value,
            "verified": self.verified,
            "language": self.language.value,
            "sentiment_compound": self.sentiment_compound,
            "sentiment_label": self.sentiment_label.value,
            "bot_score": self.bot_score,
            "is_bot": self.is_bot,
        }
        if self.fact_check_url is not None:
            out["fact_check_url"] = self.fact_check_url
        if self.language_hint is not None:
            out["language_hint"] = self.language_hint
        if self.source_bot_score is not None:
            out["source_bot_score"] = self.source_bot_score
        if self.bot_unscored:
            out["bot_unscored"] = True
        return out

    def to_public_dict(self) -> dict:
        """API-facing serialization: the declared record fields only."""
        out = {
            "id": self.id,
            "text": self.text,
            "source": self.source.value,
            "category": self.category.value,
            "hate_subtype": self.hate_subtype.value,
            "fact_check_url": self.fact_check_url,
            "verified": self.verified,
            "language": self.language.value,
            "sentiment_compound": self.sentiment_compound,
            "sentiment_label": self.sentiment_label.value,
            "bot_score": self.bot_score,
            "is_bot": self.is_bot,
        }
        if self.fact_check_url is None:
            del out["fact_check_url"]
        return out

    @classmethod
    def from_json_dict(cls, obj: dict) -> "TweetRecord":
        return cls(
            id=obj["id"],
            text=obj["text"],
            source=SourceTag(obj["source"]),
            category=Category(obj["category"]),
            hate_subtype=HateSubtype(obj["hate_subtype"]),
            fact_check_url=obj.get("fact_check_url"),
            verified=bool(obj["verified"]),
            language=Language(obj["language"]),
            sentiment_compound=float(obj["sentiment_compound"]),
            sentiment_label=SentimentLabel(obj["sentiment_label"]),
            bot_score=float(obj["bot_score"]),
            is_bot=bool(obj["is_bot"]),
            language_hint=obj.get("language_hint"),
            source_bot_score=obj.get("source_bot_score"),
            bot_unscored=bool(obj.get("bot_unscored", False)),
        )

    def with_annotations(self, **kwargs) -> "TweetRecord":
        return replace(self, **kwargs)


@dataclass
class Corpus:
    """Deduplicated, ordered collection of TweetRecords."""

    records: list[TweetRecord] = field(default_factory=list)
    counts_by_source: dict[SourceTag, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.counts_by_source:
            self.counts_by_source = {tag: 0 for tag in SourceTag}
            for r in self.records:
                self.counts_by_source[r.source] += 1

    def __len__(self) -> int:
        return len(self.records)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Corpus):
            return NotImplemented
        return self.records == other.records and self.counts_by_source == other.counts_by_source


def write_corpus_jsonl(corpus: Corpus, dest: IO[str] | str | Path) -> None:
    """Write the canonical corpus export: one record per line, LF endings."""
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="utf-8", newline="\n") as fh:
            write_corpus_jsonl(corpus, fh)
        return
    for record in corpus.records:
        dest.write(json.dumps(record.to_json_dict(), ensure_ascii=False))
        dest.write("\n")


def read_corpus_jsonl(src: IO[str] | str | Path) -> Corpus:
    """Parse a canonical corpus export back into a Corpus."""
    if isinstance(src, (str, Path)):
        with open(src, "r", encoding="utf-8") as fh:
            return read_corpus_jsonl(fh)
    records = []
    for line in src:
        line = line.strip()
        if line:
            records.append(TweetRecord.from_json_dict(json.loads(line)))
    return Corpus(records=records)

