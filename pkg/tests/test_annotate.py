"""Bot providers and the composed annotation pass."""

from __future__ import annotations

import random

import pytest

from tweetfilter.annotate import annotate_corpus, annotate_record
from tweetfilter.bots import OfflineBotProvider, RemoteBotProvider, score_bot
from tweetfilter.errors import TweetFilterError
from tweetfilter.ingest import merge, normalize
from tweetfilter.records import Language, RawRecord, SentimentLabel, SourceTag
from tweetfilter.sentiment import builtin_lexicon


@pytest.fixture(scope="module")
def bot_score_server():
    """Tiny HTTP scorer: ?handle=give-me-<x> answers {"score": <x>}."""
    import json
    import threading
    from http.server import BaseHTTPRequestHandler, HTTPServer
    from urllib.parse import parse_qs, urlparse

    requests_seen: list[tuple[str, str | None]] = []

    class Handler(BaseHTTPRequestHandler):
        def do_GET(self):
            requests_seen.append((self.path, self.headers.get("Authorization")))
            handle = parse_qs(urlparse(self.path).query).get("handle", [""])[0]
            if handle.startswith("give-me-"):
                raw = handle.removeprefix("give-me-")
                body = b'"garbage"' if raw == "garbage" else json.dumps({"score": float(raw)}).encode()
            else:
                body = json.dumps({"score": 0.8}).encode()
            self.send_response(200)
            self.send_header("Content-Type", "application/json")
            self.end_headers()
            self.wfile.write(body)

        def log_message(self, *args):
            pass

    server = HTTPServer(("127.0.0.1", 0), Handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_port}/score", requests_seen
    server.shutdown()


class FixedProvider:
    def __init__(self, value: float):
        self.value = value

    def score(self, account_handle: str) -> float:
        return self.value


class FailingProvider:
    def score(self, account_handle: str) -> float:
        raise TweetFilterError("PROVIDER_UNAVAILABLE", "simulated outage")


class TestScoreBot:
    def test_high_score_is_bot(self):
        assert score_bot("acct", FixedProvider(0.9)) == (0.9, True)

    def test_threshold_boundary_inclusive(self):
        assert score_bot("acct", FixedProvider(0.5)) == (0.5, True)

    def test_below_threshold(self):
        assert score_bot("acct", FixedProvider(0.49)) == (0.49, False)

    def test_out_of_range_scores_clamp(self):
        assert score_bot("acct", FixedProvider(1.7)) == (1.0, True)
        assert score_bot("acct", FixedProvider(-0.2)) == (0.0, False)

    def test_empty_handle_rejected(self):
        with pytest.raises(ValueError):
            score_bot("", FixedProvider(0.1))

    def test_offline_provider_deterministic(self):
        provider = OfflineBotProvider({"known": 0.77})
        assert provider.score("known") == 0.77
        first = provider.score("mystery-handle")
        assert 0.0 <= first < 1.0
        assert provider.score("mystery-handle") == first

    def test_remote_provider_requires_endpoint(self, monkeypatch):
        monkeypatch.delenv("TWEETFILTER_BOT_ENDPOINT", raising=False)
        with pytest.raises(TweetFilterError) as exc_info:
            RemoteBotProvider()
        assert exc_info.value.code == "PROVIDER_UNAVAILABLE"

    def test_remote_provider_wraps_transport_failure(self):
        provider = RemoteBotProvider(endpoint="http://127.0.0.1:9/score", timeout=0.2)
        with pytest.raises(TweetFilterError) as exc_info:
            provider.score("acct")
        assert exc_info.value.code == "PROVIDER_UNAVAILABLE"

    def test_remote_provider_happy_path(self, bot_score_server):
        url, requests_seen = bot_score_server
        provider = RemoteBotProvider(endpoint=url, token="secret-token", timeout=2.0)
        assert provider.score("acct-1") == 0.8
        path, auth = requests_seen[-1]
        assert "handle=acct-1" in path
        assert auth == "Bearer secret-token"

    def test_remote_provider_clamps_and_rejects_bad_payloads(self, bot_score_server):
        url, _ = bot_score_server
        provider = RemoteBotProvider(endpoint=url, timeout=2.0)
        assert provider.score("give-me-1.7") == 1.0  # clamped
        with pytest.raises(TweetFilterError) as exc_info:
            provider.score("give-me-garbage")
        assert exc_info.value.code == "PROVIDER_UNAVAILABLE"


def normalized(text: str, **kwargs):
    return normalize(RawRecord("1", text, "none", **kwargs), SourceTag.HATE)


class TestAnnotateRecord:
    def test_compound_and_label_from_text(self):
        record = annotate_record(normalized("good"), builtin_lexicon(), FixedProvider(0.0))
        assert record.sentiment_compound == pytest.approx(0.4404, abs=1e-4)
        assert record.sentiment_label == SentimentLabel.POSITIVE
        assert record.language == Language.UNKNOWN  # no stopwords in "good"
        assert record.is_bot is False

    def test_language_hint_precedence(self):
        record = annotate_record(
            normalized("el perro es malo", language_hint="es"), builtin_lexicon(), FixedProvider(0.0)
        )
        assert record.language == Language.ES
        hinted = annotate_record(
            normalized("the cat and the dog", language_hint="es"),
            builtin_lexicon(),
            FixedProvider(0.0),
        )
        assert hinted.language == Language.ES

    def test_dataset_bot_score_beats_provider(self):
        record = annotate_record(normalized("x", bot_score=0.9), builtin_lexicon(), FixedProvider(0.1))
        assert record.bot_score == 0.9
        assert record.is_bot is True

    def test_provider_used_when_no_dataset_score(self):
        record = annotate_record(normalized("x"), builtin_lexicon(), FixedProvider(0.6))
        assert record.bot_score == 0.6
        assert record.is_bot is True

    def test_provider_failure_degrades_to_unscored(self):
        record = annotate_record(normalized("x"), builtin_lexicon(), FailingProvider())
        assert record.bot_score == 0.0
        assert record.is_bot is False
        assert record.bot_unscored is True

    def test_idempotent(self):
        provider = OfflineBotProvider()
        lexicon = builtin_lexicon()
        once = annotate_record(normalized("very good news today!"), lexicon, provider)
        twice = annotate_record(once, lexicon, provider)
        assert once == twice

    def test_idempotent_over_random_records(self):
        rng = random.Random(31)
        provider = OfflineBotProvider()
        lexicon = builtin_lexicon()
        words = ["good", "bad", "the", "el", "not", "very", "zorp", "news", "hoy"]
        for i in range(200):
            text = " ".join(rng.choice(words) for _ in range(rng.randint(1, 10)))
            kwargs = {}
            if rng.random() < 0.3:
                kwargs["bot_score"] = round(rng.random(), 2)
            if rng.random() < 0.3:
                kwargs["language_hint"] = rng.choice(["en", "es"])
            raw = RawRecord(str(i), text, "none", **kwargs)
            record = normalize(raw, SourceTag.HATE)
            once = annotate_record(record, lexicon, provider)
            assert annotate_record(once, lexicon, provider) == once

    def test_preserves_identity_fields(self):
        raw = RawRecord("9", "claim text", "false", fact_check_url="https://e.org/9")
        record = normalize(raw, SourceTag.MISINFO)
        annotated = annotate_record(record, builtin_lexicon(), FixedProvider(0.2))
        assert annotated.id == record.id
        assert annotated.text == record.text
        assert annotated.category == record.category
        assert annotated.fact_check_url == record.fact_check_url


def test_annotate_corpus_preserves_order_and_counts():
    records = [
        normalize(RawRecord(str(i), f"text {i}", "none"), SourceTag.HATE) for i in range(10)
    ]
    corpus = merge(records)
    annotated = annotate_corpus(corpus, builtin_lexicon(), FixedProvider(0.3))
    assert [r.id for r in annotated.records] == [r.id for r in corpus.records]
    assert annotated.counts_by_source == corpus.counts_by_source
