"""HTTP contract: auth gate, parameter parsing, and store passthrough."""

from __future__ import annotations

from datetime import datetime, timedelta, timezone

import pytest
from fastapi.testclient import TestClient

from tweetfilter.api import create_app, parse_timeline_params
from tweetfilter.auth import SessionManager, UserTable
from tweetfilter.errors import TweetFilterError
from tweetfilter.filtering import FilterQuery, TriState
from tweetfilter.store import FilterStore
from tweetfilter.telemetry import MemoryTelemetryStore


@pytest.fixture(scope="module")
def service(fixture_corpus):
    store = FilterStore()
    store.bulk_load(fixture_corpus)
    telemetry = MemoryTelemetryStore()
    sessions = SessionManager(UserTable.from_config_entries([{"username": "demo", "password": "pw"}]))
    app = create_app(store, telemetry, sessions)
    client = TestClient(app, raise_server_exceptions=False)
    return client, store, telemetry


@pytest.fixture(scope="module")
def auth_header(service):
    client, _, _ = service
    token = client.post("/api/session", json={"username": "demo", "password": "pw"}).json()["token"]
    return {"Authorization": f"Bearer {token}"}


def click_payload(seq: int, **overrides) -> dict:
    payload = {
        "session_id": "ui-session-1",
        "user_id": "demo",
        "target": "meta_button",
        "tweet_id": "hate:1",
        "client_timestamp": "2025-03-01T12:00:00Z",
        "client_seq": seq,
    }
    payload.update(overrides)
    return payload


class TestSignIn:
    def test_token_ttl_is_24_hours(self, service):
        client, _, _ = service
        body = client.post("/api/session", json={"username": "demo", "password": "pw"}).json()
        expires = datetime.fromisoformat(body["expires_at"])
        remaining = expires - datetime.now(timezone.utc)
        assert timedelta(hours=23, minutes=50) < remaining <= timedelta(hours=24)

    def test_wrong_password(self, service):
        client, _, _ = service
        response = client.post("/api/session", json={"username": "demo", "password": "nope"})
        assert response.status_code == 401
        assert response.json()["code"] == "INVALID_CREDENTIALS"

    def test_unknown_user_body_identical_to_wrong_password(self, service):
        client, _, _ = service
        wrong_password = client.post("/api/session", json={"username": "demo", "password": "nope"})
        unknown_user = client.post("/api/session", json={"username": "ghost", "password": "nope"})
        assert wrong_password.status_code == unknown_user.status_code == 401
        assert wrong_password.content == unknown_user.content

    def test_malformed_body_treated_as_invalid_credentials(self, service):
        client, _, _ = service
        response = client.post("/api/session", content=b"not json")
        assert response.status_code == 401
        assert response.json()["code"] == "INVALID_CREDENTIALS"


class TestAuthGate:
    @pytest.mark.parametrize(
        "method,path",
        [
            ("GET", "/api/tweets"),
            ("GET", "/api/tweets/hate:1/meta"),
            ("POST", "/api/events/click"),
        ],
    )
    def test_endpoints_require_token(self, service, method, path):
        client, _, _ = service
        response = client.request(method, path)
        assert response.status_code == 401
        body = response.json()
        assert body["code"] == "UNAUTHENTICATED"
        assert set(body) == {"code", "message"}

    def test_garbage_token_rejected(self, service):
        client, _, _ = service
        response = client.get("/api/tweets", headers={"Authorization": "Bearer garbage"})
        assert response.status_code == 401

    def test_expired_token_rejected(self, fixture_corpus):
        moment = {"now": datetime(2025, 1, 1, tzinfo=timezone.utc)}
        sessions = SessionManager(
            UserTable.from_config_entries([{"username": "u", "password": "p"}]),
            ttl_seconds=60,
            clock=lambda: moment["now"],
        )
        store = FilterStore()
        app = create_app(store, MemoryTelemetryStore(), sessions)
        client = TestClient(app)
        token = client.post("/api/session", json={"username": "u", "password": "p"}).json()["token"]
        headers = {"Authorization": f"Bearer {token}"}
        assert client.get("/api/tweets", headers=headers).status_code == 200
        moment["now"] += timedelta(seconds=61)
        assert client.get("/api/tweets", headers=headers).status_code == 401


class TestTimeline:
    def test_no_params_is_all_defaults(self, service, auth_header, fixture_corpus):
        client, store, _ = service
        body = client.get("/api/tweets", headers=auth_header).json()
        expected = store.query(FilterQuery())
        assert body["total_matching"] == expected.total_matching
        assert [item["id"] for item in body["items"]] == [r.id for r in expected.items]
        assert body["filters"] == {
            "hate": "no",
            "misinformation": "no",
            "bot": "no",
            "verified": "no",
            "sentiment": "any",
            "language": "any",
        }
        for item in body["items"]:
            assert item["category"] == "normal"
            assert item["is_bot"] is False
            assert item["verified"] is False

    def test_mutually_exclusive_yes_yes(self, service, auth_header):
        client, _, _ = service
        response = client.get("/api/tweets?hate=yes&misinformation=yes", headers=auth_header)
        assert response.status_code == 400
        assert response.json()["code"] == "MUTUALLY_EXCLUSIVE_FILTERS"

    def test_sentiment_language_combination_matches_store(self, service, auth_header):
        client, store, _ = service
        response = client.get(
            "/api/tweets?sentiment=positive&language=es&bot=any&verified=any", headers=auth_header
        )
        body = response.json()
        query = FilterQuery(
            bot=TriState.ANY, verified=TriState.ANY, sentiment="positive", language="es"
        )
        assert body["total_matching"] == store.query(query).total_matching
        for item in body["items"]:
            assert item["sentiment_label"] == "positive"
            assert item["language"] == "es"

    def test_http_layer_adds_no_filtering_of_its_own(self, service, auth_header):
        client, store, _ = service
        for params, query in [
            ("hate=yes", FilterQuery(hate=TriState.YES)),
            ("bot=any&verified=yes", FilterQuery(bot=TriState.ANY, verified=TriState.YES)),
            ("misinformation=yes&page=2&page_size=7",
             FilterQuery(misinformation=TriState.YES, page=2, page_size=7)),
        ]:
            body = client.get(f"/api/tweets?{params}", headers=auth_header).json()
            direct = store.query(query)
            assert [item["id"] for item in body["items"]] == [r.id for r in direct.items]
            assert body["total_matching"] == direct.total_matching

    def test_unknown_parameter_rejected(self, service, auth_header):
        client, _, _ = service
        response = client.get("/api/tweets?shadowban=yes", headers=auth_header)
        assert response.status_code == 400
        assert response.json()["code"] == "INVALID_FILTER_VALUE"

    def test_duplicate_parameter_rejected(self, service, auth_header):
        client, _, _ = service
        response = client.get("/api/tweets?hate=yes&hate=no", headers=auth_header)
        assert response.status_code == 400

    def test_bad_tristate_value(self, service, auth_header):
        client, _, _ = service
        response = client.get("/api/tweets?hate=maybe", headers=auth_header)
        assert response.status_code == 400
        assert response.json()["code"] == "INVALID_FILTER_VALUE"

    def test_bad_pagination(self, service, auth_header):
        client, _, _ = service
        assert client.get("/api/tweets?page=0", headers=auth_header).status_code == 400
        response = client.get("/api/tweets?page=zero", headers=auth_header)
        assert response.json()["code"] == "INVALID_PAGINATION"

    def test_responses_deterministic(self, service, auth_header):
        client, _, _ = service
        first = client.get("/api/tweets?bot=any", headers=auth_header)
        second = client.get("/api/tweets?bot=any", headers=auth_header)
        assert first.content == second.content


class TestParseTimelineParams:
    def test_defaults(self):
        query = parse_timeline_params([])
        assert query == FilterQuery()

    def test_round_trip_from_query_string(self):
        query = parse_timeline_params(
            [("hate", "yes"), ("sentiment", "negative"), ("page", "3"), ("page_size", "50")]
        )
        assert query == FilterQuery(
            hate=TriState.YES, sentiment="negative", page=3, page_size=50
        )

    def test_unknown_key(self):
        with pytest.raises(TweetFilterError):
            parse_timeline_params([("q", "covid")])


class TestMetaEndpoint:
    def test_misinformation_record_has_fact_check(self, service, auth_header, fixture_corpus):
        client, _, _ = service
        record = next(r for r in fixture_corpus.records if r.category.value == "misinformation")
        body = client.get(f"/api/tweets/{record.id}/meta", headers=auth_header).json()
        assert body["misinformation"] is True
        assert body["fact_check_url"] == record.fact_check_url

    def test_normal_record_flags_false(self, service, auth_header, fixture_corpus):
        client, _, _ = service
        record = next(r for r in fixture_corpus.records if r.category.value == "normal")
        body = client.get(f"/api/tweets/{record.id}/meta", headers=auth_header).json()
        assert body["hate_speech"] is False
        assert body["misinformation"] is False
        assert "fact_check_url" not in body

    def test_unknown_id_404(self, service, auth_header):
        client, _, _ = service
        response = client.get("/api/tweets/nonexistent:0/meta", headers=auth_header)
        assert response.status_code == 404
        assert response.json()["code"] == "NOT_FOUND"


class TestClickEndpoint:
    def test_valid_event_accepted(self, service, auth_header):
        client, _, telemetry = service
        before = telemetry.count()
        response = client.post("/api/events/click", headers=auth_header, json=click_payload(100))
        assert response.status_code == 202
        assert response.json()["receipt_id"]
        assert telemetry.count() == before + 1

    def test_duplicate_event_not_double_stored(self, service, auth_header):
        client, _, telemetry = service
        first = client.post("/api/events/click", headers=auth_header, json=click_payload(200))
        count_after_first = telemetry.count()
        second = client.post("/api/events/click", headers=auth_header, json=click_payload(200))
        assert second.status_code == 202
        assert second.json()["receipt_id"] == first.json()["receipt_id"]
        assert telemetry.count() == count_after_first

    def test_missing_target_rejected(self, service, auth_header):
        client, _, _ = service
        payload = click_payload(300)
        del payload["target"]
        response = client.post("/api/events/click", headers=auth_header, json=payload)
        assert response.status_code == 400
        assert response.json()["code"] == "MALFORMED_EVENT"

    def test_client_supplied_receipt_rejected(self, service, auth_header):
        client, _, _ = service
        response = client.post(
            "/api/events/click", headers=auth_header, json=click_payload(400, receipt_id="forged")
        )
        assert response.status_code == 400


class TestErrorHygiene:
    def test_unrouted_path_carries_registry_code(self, service):
        client, _, _ = service
        response = client.get("/api/nonexistent")
        assert response.status_code == 404
        assert response.json()["code"] == "NOT_FOUND"

    def test_wrong_method_carries_registry_code(self, service):
        client, _, _ = service
        response = client.post("/api/tweets")
        assert response.status_code == 405
        assert response.json()["code"] == "METHOD_NOT_ALLOWED"


    def test_unexpected_error_is_opaque(self, fixture_corpus):
        class ExplodingStore:
            def query(self, q):
                raise RuntimeError("secret internal detail")

            def get_meta(self, tweet_id):
                raise RuntimeError("secret internal detail")

        sessions = SessionManager(UserTable.from_config_entries([{"username": "u", "password": "p"}]))
        app = create_app(ExplodingStore(), MemoryTelemetryStore(), sessions)
        client = TestClient(app, raise_server_exceptions=False)
        token = client.post("/api/session", json={"username": "u", "password": "p"}).json()["token"]
        response = client.get("/api/tweets", headers={"Authorization": f"Bearer {token}"})
        assert response.status_code == 500
        body = response.json()
        assert body == {"code": "INTERNAL_ERROR", "message": "internal error"}
        assert b"secret" not in response.content
