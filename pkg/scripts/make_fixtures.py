#!/usr/bin/env python3
"""Regenerate the bundled synthetic corpus fixtures.

Writes fixtures/hate_tweets.jsonl (490 rows) and fixtures/misinfo_tweets.csv
(499 rows): 989 unique records total, schema-identical to the two labeled
source datasets the service ingests. Texts are composed from the built-in
stopword sets and demo lexicon so sentiment and language annotation have
something real to chew on. Fully deterministic for a fixed seed.
"""

from __future__ import annotations

import csv
import json
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tweetfilter.language import STOPWORDS_EN, STOPWORDS_ES
from tweetfilter.sentiment import DEFAULT_BOOSTERS, DEFAULT_NEGATORS, builtin_lexicon

SEED = 20240989
HATE_LABELS = [("racism", 118), ("sexism", 112), ("none", 260)]  # 490
MISINFO_LABELS = [("false", 182), ("partially_false", 78), ("true", 239)]  # 499

EN_FILLERS = [
    "people", "today", "city", "game", "team", "news", "weather", "music",
    "coffee", "friend", "photo", "video", "story", "night", "morning",
    "vaccine", "election", "report", "study", "crowd",
]
ES_FILLERS = [
    "gente", "hoy", "ciudad", "juego", "equipo", "noticias", "tiempo",
    "musica", "cafe", "amigo", "foto", "historia", "noche", "manana",
    "vacuna", "eleccion", "informe", "estudio",
]


def _word_pools():
    lexicon = builtin_lexicon()
    en_only = sorted(STOPWORDS_EN - STOPWORDS_ES)
    es_only = sorted(STOPWORDS_ES - STOPWORDS_EN)
    positive = sorted(t for t, v in lexicon.entries.items() if v > 0)
    negative = sorted(t for t, v in lexicon.entries.items() if v < 0)
    return en_only, es_only, positive, negative


def compose_text(rng: random.Random, en_only, es_only, positive, negative) -> tuple[str, str]:
    """(text, language): en / es / mixed-nonsense in roughly 70/25/5 parts."""
    roll = rng.random()
    if roll < 0.70:
        lang, stopwords, fillers = "en", en_only, EN_FILLERS
    elif roll < 0.95:
        lang, stopwords, fillers = "es", es_only, ES_FILLERS
    else:
        lang, stopwords, fillers = "none", [], ["xylo", "qwerty", "zorp", "flib", "vune"]

    words: list[str] = []
    for _ in range(rng.randint(4, 12)):
        bucket = rng.random()
        if stopwords and bucket < 0.55:
            words.append(rng.choice(stopwords))
        else:
            words.append(rng.choice(fillers))

    # Sprinkle sentiment-bearing words, sometimes modified.
    for _ in range(rng.randint(0, 2)):
        term = rng.choice(positive if rng.random() < 0.5 else negative)
        if rng.random() < 0.20:
            term = f"{rng.choice(sorted(DEFAULT_NEGATORS))} {term}"
        elif rng.random() < 0.20:
            term = f"{rng.choice(sorted(DEFAULT_BOOSTERS))} {term}"
        if rng.random() < 0.10:
            term = term.upper()
        words.insert(rng.randrange(len(words) + 1), term)

    text = " ".join(words)
    if rng.random() < 0.15:
        text += "!" * rng.randint(1, 4)
    return text, lang


def build_rows(rng: random.Random, label_plan, start_id: int) -> list[dict]:
    en_only, es_only, positive, negative = _word_pools()
    labels = [label for label, count in label_plan for _ in range(count)]
    rng.shuffle(labels)
    rows = []
    for offset, label in enumerate(labels):
        source_id = str(start_id + offset)
        text, lang = compose_text(rng, en_only, es_only, positive, negative)
        row: dict = {"source_id": source_id, "text": text, "label": label}
        if label in ("false", "partially_false"):
            row["fact_check_url"] = f"https://factcheck.example/claims/{source_id}"
        elif label == "true" and rng.random() < 0.03:
            # A stray URL on a non-misinformation row: normalization drops it.
            row["fact_check_url"] = f"https://factcheck.example/claims/{source_id}"
        if rng.random() < 0.30:
            row["verified"] = rng.random() < 0.40
        if rng.random() < 0.45:
            row["bot_score"] = round(rng.random(), 2)
        if lang in ("en", "es") and rng.random() < 0.10:
            row["language_hint"] = lang
        rows.append(row)
    return rows


def main() -> None:
    out_dir = Path(__file__).resolve().parents[1] / "fixtures"
    out_dir.mkdir(exist_ok=True)
    rng = random.Random(SEED)

    hate_rows = build_rows(rng, HATE_LABELS, start_id=1)
    with open(out_dir / "hate_tweets.jsonl", "w", encoding="utf-8", newline="\n") as fh:
        for row in hate_rows:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")

    misinfo_rows = build_rows(rng, MISINFO_LABELS, start_id=1001)
    columns = ["source_id", "text", "label", "fact_check_url", "verified", "bot_score", "language_hint"]
    with open(out_dir / "misinfo_tweets.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns)
        writer.writeheader()
        for row in misinfo_rows:
            writer.writerow(row)

    print(f"wrote {len(hate_rows)} hate rows and {len(misinfo_rows)} misinfo rows to {out_dir}")


if __name__ == "__main__":
    main()
