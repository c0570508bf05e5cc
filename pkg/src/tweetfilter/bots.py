"""Bot-likelihood providers behind one interface.

The offline provider is fixture-backed and deterministic so a whole corpus
can be annotated reproducibly with no network. The remote client talks to a
Botometer-style scoring service; any transport or payload failure surfaces
as PROVIDER_UNAVAILABLE and the annotation layer degrades to an unscored
record instead of failing the batch.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path
from typing import Protocol

import requests

from .errors import TweetFilterError
from .records import BOT_THRESHOLD

ENDPOINT_ENV = "TWEETFILTER_BOT_ENDPOINT"
TOKEN_ENV = "TWEETFILTER_BOT_TOKEN"


def clamp_score(value: float) -> float:
    return min(1.0, max(0.0, float(value)))


class BotProvider(Protocol):
    def score(self, account_handle: str) -> float:
        """Bot likelihood in [0, 1] for the given handle."""
        ...


class OfflineBotProvider:
    """Scores from an in-memory table, with a deterministic hash-derived
    fallback for handles the table does not cover."""

    def __init__(self, scores: dict[str, float] | None = None):
        self._scores = {k: clamp_score(v) for k, v in (scores or {}).items()}

    @classmethod
    def from_file(cls, path: str | Path) -> "OfflineBotProvider":
        """Load a JSON object mapping handle -> score."""
        with open(path, "r", encoding="utf-8") as fh:
            return cls(json.load(fh))

    def score(self, account_handle: str) -> float:
        if account_handle in self._scores:
            return self._scores[account_handle]
        digest = hashlib.sha256(account_handle.encode("utf-8")).digest()
        return int.from_bytes(digest[:4], "big") / 2**32


class RemoteBotProvider:
    """HTTP client for a remote scoring service.

    GET <endpoint>?handle=<handle> with a bearer token; expects a JSON body
    carrying a numeric "score" field.
    """

    def __init__(self, endpoint: str | None = None, token: str | None = None, timeout: float = 5.0):
        self.endpoint = endpoint or os.environ.get(ENDPOINT_ENV, "")
        self.token = token if token is not None else os.environ.get(TOKEN_ENV, "")
        self.timeout = timeout
        if not self.endpoint:
            raise TweetFilterError(
                "PROVIDER_UNAVAILABLE", f"no remote endpoint configured (set {ENDPOINT_ENV})"
            )

    def score(self, account_handle: str) -> float:
        headers = {"Authorization": f"Bearer {self.token}"} if self.token else {}
        try:
            response = requests.get(
                self.endpoint,
                params={"handle": account_handle},
                headers=headers,
                timeout=self.timeout,
            )
            response.raise_for_status()
            payload = response.json()
            return clamp_score(float(payload["score"]))
        except (requests.RequestException, KeyError, TypeError, ValueError) as exc:
            raise TweetFilterError(
                "PROVIDER_UNAVAILABLE", f"remote bot provider failed: {exc}"
            ) from exc


def score_bot(account_handle: str, provider: BotProvider) -> tuple[float, bool]:
    """Clamped provider score plus the thresholded bot verdict."""
    if not account_handle:
        raise ValueError("account_handle must be non-empty")
    score = clamp_score(provider.score(account_handle))
    return score, score >= BOT_THRESHOLD
