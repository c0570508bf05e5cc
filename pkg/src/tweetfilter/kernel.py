"""Columnar match kernel for the timeline query path.

Per-request filtering is the one hot loop in the service: every query scans
the whole corpus. Records are packed once at load time into small int8
columns; a query becomes a 6-slot selector vector and matching becomes a
single pass producing a boolean mask.

Two interchangeable kernels compute the mask: a numba @njit loop and a pure
numpy vectorized fallback. Selection order: the TWEETFILTER_KERNEL
environment variable ("numba" or "numpy") wins; otherwise numba is used
when importable. benchmarks/bench_filter_kernel.py compares the two.
"""

from __future__ import annotations

import os

import numpy as np

from .filtering import FilterQuery, TriState
from .records import Category, Language, SentimentLabel, TweetRecord

KERNEL_ENV = "TWEETFILTER_KERNEL"

# Selector slots: hate, misinformation, bot, verified, sentiment, language.
# Tri-state slots hold -1 (any) / 0 (require false) / 1 (require true);
# categorical slots hold -1 (any) or the attribute code.
ANY_CODE = np.int8(-1)

CATEGORY_CODES = {Category.NORMAL: 0, Category.HATE_SPEECH: 1, Category.MISINFORMATION: 2}
SENTIMENT_CODES = {SentimentLabel.POSITIVE: 0, SentimentLabel.NEUTRAL: 1, SentimentLabel.NEGATIVE: 2}
LANGUAGE_CODES = {Language.EN: 0, Language.ES: 1, Language.UNKNOWN: 2}

_HATE_CODE = CATEGORY_CODES[Category.HATE_SPEECH]
_MISINFO_CODE = CATEGORY_CODES[Category.MISINFORMATION]

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


class ColumnarIndex:
    """int8 column store over a fixed record list."""

    def __init__(self, records: list[TweetRecord]):
        n = len(records)
        self.size = n
        self.category = np.empty(n, dtype=np.int8)
        self.is_bot = np.empty(n, dtype=np.int8)
        self.verified = np.empty(n, dtype=np.int8)
        self.sentiment = np.empty(n, dtype=np.int8)
        self.language = np.empty(n, dtype=np.int8)
        for i, r in enumerate(records):
            self.category[i] = CATEGORY_CODES[r.category]
            self.is_bot[i] = 1 if r.is_bot else 0
            self.verified[i] = 1 if r.verified else 0
            self.sentiment[i] = SENTIMENT_CODES[r.sentiment_label]
            self.language[i] = LANGUAGE_CODES[r.language]

    def matching_positions(self, q: FilterQuery) -> np.ndarray:
        """Indices of matching records, in stable corpus order."""
        mask = match_mask(
            self.category, self.is_bot, self.verified, self.sentiment, self.language, encode_query(q)
        )
        return np.flatnonzero(mask)


def encode_query(q: FilterQuery) -> np.ndarray:
    def tri(selector: TriState) -> int:
        if selector == TriState.ANY:
            return -1
        return 1 if selector == TriState.YES else 0

    sentiment = -1 if q.sentiment == "any" else SENTIMENT_CODES[SentimentLabel(q.sentiment)]
    language = -1 if q.language == "any" else LANGUAGE_CODES[Language(q.language)]
    return np.array(
        [tri(q.hate), tri(q.misinformation), tri(q.bot), tri(q.verified), sentiment, language],
        dtype=np.int8,
    )


def match_mask_numpy(category, is_bot, verified, sentiment, language, selector) -> np.ndarray:
    """Vectorized mask composition, one boolean array per active selector."""
    mask = np.ones(category.shape[0], dtype=np.bool_)
    if selector[0] != ANY_CODE:
        mask &= (category == _HATE_CODE) == bool(selector[0])
    if selector[1] != ANY_CODE:
        mask &= (category == _MISINFO_CODE) == bool(selector[1])
    if selector[2] != ANY_CODE:
        mask &= is_bot == selector[2]
    if selector[3] != ANY_CODE:
        mask &= verified == selector[3]
    if selector[4] != ANY_CODE:
        mask &= sentiment == selector[4]
    if selector[5] != ANY_CODE:
        mask &= language == selector[5]
    return mask


@njit(cache=True)
def _match_mask_numba(category, is_bot, verified, sentiment, language, selector, out):
    # Branchless on purpose: hoisting the selector slots to scalars and using
    # bitwise ops keeps the loop free of data-dependent branches, so LLVM
    # vectorizes it and the cost is flat regardless of which filters are on.
    sel_hate, sel_misinfo, sel_bot = selector[0], selector[1], selector[2]
    sel_verified, sel_sentiment, sel_language = selector[3], selector[4], selector[5]
    hate_any = sel_hate == -1
    hate_want = sel_hate == 1
    misinfo_any = sel_misinfo == -1
    misinfo_want = sel_misinfo == 1
    bot_any = sel_bot == -1
    verified_any = sel_verified == -1
    sentiment_any = sel_sentiment == -1
    language_any = sel_language == -1
    for i in range(category.shape[0]):
        out[i] = (
            (hate_any | ((category[i] == 1) == hate_want))
            & (misinfo_any | ((category[i] == 2) == misinfo_want))
            & (bot_any | (is_bot[i] == sel_bot))
            & (verified_any | (verified[i] == sel_verified))
            & (sentiment_any | (sentiment[i] == sel_sentiment))
            & (language_any | (language[i] == sel_language))
        )


def match_mask_numba(category, is_bot, verified, sentiment, language, selector) -> np.ndarray:
    out = np.empty(category.shape[0], dtype=np.bool_)
    _match_mask_numba(category, is_bot, verified, sentiment, language, selector, out)
    return out


def available_kernels() -> tuple[str, ...]:
    return ("numba", "numpy") if HAS_NUMBA else ("numpy",)


def select_kernel(name: str | None = None):
    """Resolve a kernel by name, falling back to env then availability."""
    requested = name or os.environ.get(KERNEL_ENV, "").lower() or ("numba" if HAS_NUMBA else "numpy")
    if requested == "numba":
        if not HAS_NUMBA:
            raise ValueError("numba kernel requested but numba is not importable")
        return match_mask_numba
    if requested == "numpy":
        return match_mask_numpy
    raise ValueError(f"unknown kernel {requested!r} (expected numba or numpy)")


def match_mask(category, is_bot, verified, sentiment, language, selector) -> np.ndarray:
    return select_kernel()(category, is_bot, verified, sentiment, language, selector)
