"""Rule-based lexicon sentiment scoring.

A post's raw score is the sum of its tokens' lexicon valences after three
modifier rules (booster, all-caps emphasis, negation, applied in that
order), plus an exclamation bonus. The raw sum is squashed into (-1, 1)
with x / sqrt(x^2 + alpha) and bucketed into positive / neutral / negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import TweetFilterError
from .records import SentimentLabel

BOOSTER_INCREMENT = 0.293
CAPS_INCREMENT = 0.733
NEGATION_FACTOR = -0.74
EXCLAMATION_INCREMENT = 0.292
MAX_EXCLAMATIONS = 3
NORMALIZATION_ALPHA = 15.0
POSITIVE_THRESHOLD = 0.05
NEGATIVE_THRESHOLD = -0.05
VALENCE_MIN, VALENCE_MAX = -4.0, 4.0

DEFAULT_NEGATORS = frozenset(
    {"not", "no", "never", "none", "neither", "nor", "cannot", "nothing", "hardly", "without"}
)
DEFAULT_BOOSTERS = frozenset(
    {"very", "extremely", "really", "so", "totally", "absolutely", "incredibly", "super"}
)

# Characters trimmed off token edges; trailing "!" of the whole text is
# counted separately before trimming.
_EDGE_PUNCTUATION = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~¡¿«»…‘’“”"


def _sign(x: float) -> float:
    return (x > 0) - (x < 0)


def clean_token(word: str) -> str:
    """Lowercased token with punctuation stripped from both edges."""
    return word.strip(_EDGE_PUNCTUATION).lower()


@dataclass(frozen=True)
class Token:
    text: str  # cleaned, lowercased form used for lexicon lookup
    all_caps: bool
    preceded_by_negator: bool
    preceded_by_booster: bool


@dataclass(frozen=True)
class TokenizedText:
    tokens: list[Token]
    trailing_exclamations: int


@dataclass(frozen=True)
class SentimentScore:
    raw_sum: float
    compound: float
    label: SentimentLabel


class SentimentLexicon:
    """token -> valence map plus the negator/booster vocabularies."""

    def __init__(
        self,
        entries: dict[str, float],
        negators: frozenset[str] = DEFAULT_NEGATORS,
        boosters: frozenset[str] = DEFAULT_BOOSTERS,
    ):
        for token, valence in entries.items():
            if token != token.lower() or any(ch.isspace() for ch in token):
                raise ValueError(f"lexicon key {token!r} must be lowercase without whitespace")
            if not VALENCE_MIN <= valence <= VALENCE_MAX:
                raise ValueError(f"valence for {token!r} outside [{VALENCE_MIN}, {VALENCE_MAX}]")
        self.entries = dict(entries)
        self.negators = frozenset(w.lower() for w in negators)
        self.boosters = frozenset(w.lower() for w in boosters)

    @classmethod
    def from_file(cls, path: str | Path, **kwargs) -> "SentimentLexicon":
        """Load a lexicon file: one `token<TAB>valence` pair per line."""
        entries: dict[str, float] = {}
        with open(path, "r", encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line.strip() or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 2:
                    raise ValueError(f"{path}:{line_no}: expected 'token<TAB>valence'")
                entries[parts[0].strip().lower()] = float(parts[1])
        return cls(entries, **kwargs)


def builtin_lexicon() -> SentimentLexicon:
    """The small lexicon shipped with the package, for demos and tests."""
    text = resources.files("tweetfilter").joinpath("data/lexicon.tsv").read_text("utf-8")
    entries = {}
    for line in text.splitlines():
        if line.strip() and not line.startswith("#"):
            token, valence = line.split("\t")
            entries[token] = float(valence)
    return SentimentLexicon(entries)


def tokenize(
    text: str,
    negators: frozenset[str] = DEFAULT_NEGATORS,
    boosters: frozenset[str] = DEFAULT_BOOSTERS,
) -> TokenizedText:
    """Split on whitespace and flag each token from its immediate left
    neighbor (negator / booster, case-insensitive) and its own casing."""
    stripped = text.strip()
    exclamations = 0
    while exclamations < len(stripped) and stripped[-1 - exclamations] == "!":
        exclamations += 1

    tokens: list[Token] = []
    previous = ""
    for word in stripped.split():
        cleaned = clean_token(word)
        if not cleaned:
            continue
        letters = [ch for ch in word if ch.isalpha()]
        tokens.append(
            Token(
                text=cleaned,
                all_caps=bool(letters) and all(ch.isupper() for ch in letters),
                preceded_by_negator=previous in negators,
                preceded_by_booster=previous in boosters,
            )
        )
        previous = cleaned
    return TokenizedText(tokens=tokens, trailing_exclamations=exclamations)


def raw_sentiment(tokenized: TokenizedText, lexicon: SentimentLexicon) -> float:
    """Sum modifier-adjusted valences; tokens outside the lexicon add 0."""
    total = 0.0
    for token in tokenized.tokens:
        valence = lexicon.entries.get(token.text)
        if valence is None:
            continue
        if token.preceded_by_booster:
            valence += _sign(valence) * BOOSTER_INCREMENT
        if token.all_caps:
            valence += _sign(valence) * CAPS_INCREMENT
        if token.preceded_by_negator:
            valence *= NEGATION_FACTOR
        total += valence
    if total != 0.0 and tokenized.trailing_exclamations:
        bonus = min(tokenized.trailing_exclamations, MAX_EXCLAMATIONS) * EXCLAMATION_INCREMENT
        total += _sign(total) * bonus
    return total


def normalize_sentiment(raw_sum: float, alpha: float = NORMALIZATION_ALPHA) -> float:
    """Squash an unbounded raw sum into (-1, 1): odd and strictly increasing."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    return raw_sum / math.sqrt(raw_sum * raw_sum + alpha)


def label_sentiment(compound: float) -> SentimentLabel:
    if abs(compound) > 1.0:
        raise TweetFilterError("OUT_OF_RANGE", f"compound {compound} outside [-1, 1]")
    if compound >= POSITIVE_THRESHOLD:
        return SentimentLabel.POSITIVE
    if compound <= NEGATIVE_THRESHOLD:
        return SentimentLabel.NEGATIVE
    return SentimentLabel.NEUTRAL


def score_text(text: str, lexicon: SentimentLexicon) -> SentimentScore:
    """Tokenize, score and label in one step."""
    tokenized = tokenize(text, negators=lexicon.negators, boosters=lexicon.boosters)
    raw = raw_sentiment(tokenized, lexicon)
    compound = normalize_sentiment(raw)
    return SentimentScore(raw_sum=raw, compound=compound, label=label_sentiment(compound))
