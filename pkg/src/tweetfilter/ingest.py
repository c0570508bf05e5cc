"""Source-dataset ingestion: parse JSONL/CSV rows, map labels, merge corpora.

Both source datasets arrive as tabular files with at least source_id, text
and label columns. Malformed rows land in a rejects report instead of
killing the load; one bad row must never block a full corpus build.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .errors import TweetFilterError
from .records import (
    Category,
    Corpus,
    HateSubtype,
    Language,
    RawRecord,
    SentimentLabel,
    SourceTag,
    TweetRecord,
)

REQUIRED_COLUMNS = ("source_id", "text", "label")
OPTIONAL_COLUMNS = ("fact_check_url", "verified", "bot_score", "language_hint")

# source label -> (category, hate_subtype, fact_check_required)
LABEL_MAPS = {
    SourceTag.HATE: {
        "racism": (Category.HATE_SPEECH, HateSubtype.RACISM, False),
        "sexism": (Category.HATE_SPEECH, HateSubtype.SEXISM, False),
        "none": (Category.NORMAL, HateSubtype.NONE, False),
    },
    SourceTag.MISINFO: {
        "false": (Category.MISINFORMATION, HateSubtype.NONE, True),
        "partially_false": (Category.MISINFORMATION, HateSubtype.NONE, True),
        "true": (Category.NORMAL, HateSubtype.NONE, False),
    },
}


@dataclass(frozen=True)
class Reject:
    """One dropped input row and why it was dropped."""

    line: int
    reason: str
    stage: str  # "parse" or "normalize"
    raw: str = ""

    def to_json_dict(self) -> dict:
        return {"line": self.line, "reason": self.reason, "stage": self.stage, "raw": self.raw}


@dataclass
class ParseResult:
    records: list[RawRecord] = field(default_factory=list)
    rejects: list[Reject] = field(default_factory=list)


def _coerce_optional_bool(value, errors: list[str]):
    if value is None or value == "":
        return None
    if isinstance(value, bool):
        return value
    if isinstance(value, str):
        lowered = value.strip().lower()
        if lowered in ("true", "1", "yes"):
            return True
        if lowered in ("false", "0", "no"):
            return False
    errors.append(f"verified value {value!r} is not a boolean")
    return None


def _coerce_optional_float(value, errors: list[str]):
    if value is None or value == "":
        return None
    try:
        return float(value)
    except (TypeError, ValueError):
        errors.append(f"bot_score value {value!r} is not a number")
        return None


def _build_raw(obj: dict, line_no: int, raw_text: str) -> RawRecord | Reject:
    errors: list[str] = []
    source_id = obj.get("source_id")
    if isinstance(source_id, (int, float)) and not isinstance(source_id, bool):
        source_id = format(source_id, "g")
    text = obj.get("text")
    label = obj.get("label")
    fact_check_url = obj.get("fact_check_url") or None
    verified = _coerce_optional_bool(obj.get("verified"), errors)
    bot_score = _coerce_optional_float(obj.get("bot_score"), errors)
    language_hint = obj.get("language_hint") or None
    if errors:
        return Reject(line_no, "; ".join(errors), "parse", raw_text)
    record = RawRecord(
        source_id=source_id if isinstance(source_id, str) else "",
        text=text if isinstance(text, str) else "",
        label=label if isinstance(label, str) else "",
        fact_check_url=fact_check_url,
        verified=verified,
        bot_score=bot_score,
        language_hint=language_hint,
    )
    problems = record.problems()
    if problems:
        return Reject(line_no, "; ".join(problems), "parse", raw_text)
    return record


def parse_corpus(data: bytes, fmt: str, source: SourceTag) -> ParseResult:
    """Parse one source file into RawRecords plus a rejects report.

    `fmt` is "jsonl" or "csv". The whole input must be UTF-8; CSV inputs
    must have a header naming at least source_id, text, label.
    """
    if fmt not in ("jsonl", "csv"):
        raise TweetFilterError("INVALID_FILTER_VALUE", f"unknown ingest format: {fmt}")
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise TweetFilterError("UNDECODABLE_INPUT", f"input is not UTF-8: {exc}") from exc

    result = ParseResult()
    if fmt == "jsonl":
        for line_no, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped:
                continue
            try:
                obj = json.loads(stripped)
            except json.JSONDecodeError as exc:
                result.rejects.append(Reject(line_no, f"invalid JSON: {exc.msg}", "parse", stripped))
                continue
            if not isinstance(obj, dict):
                result.rejects.append(Reject(line_no, "line is not a JSON object", "parse", stripped))
                continue
            built = _build_raw(obj, line_no, stripped)
            (result.records if isinstance(built, RawRecord) else result.rejects).append(built)
    else:
        reader = csv.DictReader(io.StringIO(text))
        header = reader.fieldnames or []
        missing = [c for c in REQUIRED_COLUMNS if c not in header]
        if missing:
            raise TweetFilterError(
                "MISSING_REQUIRED_COLUMN",
                f"csv header lacks required column(s): {', '.join(missing)}",
            )
        for line_no, row in enumerate(reader, start=2):  # line 1 is the header
            obj = {k: v for k, v in row.items() if k in REQUIRED_COLUMNS + OPTIONAL_COLUMNS}
            built = _build_raw(obj, line_no, ",".join(str(v) for v in row.values() if v is not None))
            (result.records if isinstance(built, RawRecord) else result.rejects).append(built)
    return result


def normalize(raw: RawRecord, source: SourceTag) -> TweetRecord:
    """Map a RawRecord onto the canonical schema (labels, id, harm category).

    Sentiment, language and bot fields are left at sentinel defaults; the
    annotation pipeline fills them. Labels are matched case-insensitively
    after trimming. A fact-check URL on a non-misinformation row is dropped
    so the "present iff misinformation" invariant holds.
    """
    problems = raw.problems()
    if problems:
        raise TweetFilterError("UNKNOWN_LABEL", f"raw record invalid: {'; '.join(problems)}")
    label = raw.label.strip().lower()
    mapping = LABEL_MAPS[source]
    if label not in mapping:
        raise TweetFilterError(
            "UNKNOWN_LABEL", f"label {raw.label!r} is not in the {source.value} mapping table"
        )
    category, subtype, needs_fact_check = mapping[label]
    if needs_fact_check and not raw.fact_check_url:
        raise TweetFilterError(
            "MISSING_FACT_CHECK",
            f"label {raw.label!r} requires a fact_check_url (source_id={raw.source_id})",
        )
    return TweetRecord(
        id=f"{source.value}:{raw.source_id}",
        text=raw.text,
        source=source,
        category=category,
        hate_subtype=subtype,
        fact_check_url=raw.fact_check_url if category == Category.MISINFORMATION else None,
        verified=bool(raw.verified) if raw.verified is not None else False,
        language=Language.UNKNOWN,
        sentiment_compound=0.0,
        sentiment_label=SentimentLabel.NEUTRAL,
        bot_score=0.0,
        is_bot=False,
        language_hint=raw.language_hint,
        source_bot_score=raw.bot_score,
    )


def normalize_all(parsed: ParseResult, source: SourceTag) -> tuple[list[TweetRecord], list[Reject]]:
    """Normalize every parsed record; failures extend the rejects report."""
    records: list[TweetRecord] = []
    rejects = list(parsed.rejects)
    for position, raw in enumerate(parsed.records, start=1):
        try:
            records.append(normalize(raw, source))
        except TweetFilterError as exc:
            rejects.append(Reject(position, f"{exc.code}: {exc.message}", "normalize", raw.source_id))
    return records, rejects


def merge(records: list[TweetRecord]) -> Corpus:
    """Collapse duplicate ids (first occurrence wins), preserving order."""
    seen: set[str] = set()
    unique: list[TweetRecord] = []
    for record in records:
        if record.id in seen:
            continue
        seen.add(record.id)
        unique.append(record)
    return Corpus(records=unique)
