"""HTTP surface: sign-in, filtered timeline, meta pop-up data, click intake.

Every endpoint except sign-in requires `Authorization: Bearer <token>`.
Query parameters are parsed by hand so the contract stays strict: unknown
parameters are rejected instead of ignored, absent boolean filters default
to "no" (the documented timeline default) and absent categorical filters to
"any". Error bodies always carry a registry code and never leak internals.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from .auth import SessionManager, SessionToken, UserTable
from .config import ServiceConfig
from .errors import TweetFilterError
from .filtering import DEFAULT_PAGE_SIZE, FilterQuery, TriState
from .records import read_corpus_jsonl
from .store import FilterStore, MemoryStorage, SqliteStorage
from .telemetry import ClickEvent, MemoryTelemetryStore, SqliteTelemetryStore, TelemetryStore, iso_utc

KNOWN_PARAMS = ("hate", "misinformation", "bot", "verified", "sentiment", "language", "page", "page_size")
TRI_STATE_PARAMS = ("hate", "misinformation", "bot", "verified")


def parse_timeline_params(params: list[tuple[str, str]]) -> FilterQuery:
    """Build a FilterQuery from raw query parameters (documented defaults)."""
    seen: dict[str, str] = {}
    for key, value in params:
        if key not in KNOWN_PARAMS:
            raise TweetFilterError("INVALID_FILTER_VALUE", f"unknown filter parameter: {key}")
        if key in seen:
            raise TweetFilterError("INVALID_FILTER_VALUE", f"duplicate filter parameter: {key}")
        seen[key] = value

    fields: dict = {}
    for name in TRI_STATE_PARAMS:
        raw = seen.get(name, TriState.NO.value)
        try:
            fields[name] = TriState(raw)
        except ValueError:
            raise TweetFilterError(
                "INVALID_FILTER_VALUE", f"{name} must be any|yes|no, got {raw!r}"
            ) from None
    fields["sentiment"] = seen.get("sentiment", "any")
    fields["language"] = seen.get("language", "any")
    for name, default in (("page", 1), ("page_size", DEFAULT_PAGE_SIZE)):
        raw = seen.get(name)
        if raw is None:
            fields[name] = default
            continue
        try:
            fields[name] = int(raw)
        except ValueError:
            raise TweetFilterError("INVALID_PAGINATION", f"{name} must be an integer, got {raw!r}") from None
    return FilterQuery(**fields)


def _bearer_token(request: Request) -> str | None:
    header = request.headers.get("authorization", "")
    if header.lower().startswith("bearer "):
        return header[7:].strip()
    return None


def create_app(
    store: FilterStore,
    telemetry: TelemetryStore,
    sessions: SessionManager,
    static_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="tweetfilter", docs_url=None, redoc_url=None, openapi_url=None)

    @app.exception_handler(TweetFilterError)
    async def domain_error(_request: Request, exc: TweetFilterError) -> JSONResponse:
        return JSONResponse(status_code=exc.http_status, content=exc.to_payload())

    @app.exception_handler(Exception)
    async def unexpected_error(_request: Request, _exc: Exception) -> JSONResponse:
        # Deliberately opaque: no stack traces or internals on the wire.
        return JSONResponse(status_code=500, content={"code": "INTERNAL_ERROR", "message": "internal error"})

    @app.exception_handler(StarletteHTTPException)
    async def routing_error(_request: Request, exc: StarletteHTTPException) -> JSONResponse:
        # Unrouted paths and wrong methods still get registry-coded bodies.
        code = {404: "NOT_FOUND", 405: "METHOD_NOT_ALLOWED"}.get(exc.status_code, "INTERNAL_ERROR")
        return JSONResponse(status_code=exc.status_code, content={"code": code, "message": str(exc.detail)})

    def require_session(request: Request) -> SessionToken:
        return sessions.authenticate(_bearer_token(request))

    @app.post("/api/session")
    async def sign_in(request: Request) -> JSONResponse:
        try:
            body = await request.json()
        except Exception:
            body = None
        if not isinstance(body, dict):
            raise TweetFilterError("INVALID_CREDENTIALS", "invalid username or password")
        session = sessions.sign_in(body.get("username", ""), body.get("password", ""))
        return JSONResponse(
            status_code=200,
            content={"token": session.token, "expires_at": iso_utc(session.expires_at)},
        )

    @app.get("/api/tweets")
    async def timeline(request: Request) -> JSONResponse:
        require_session(request)
        query = parse_timeline_params(list(request.query_params.multi_items()))
        page = store.query(query)
        return JSONResponse(status_code=200, content=page.to_json_dict(query))

    @app.get("/api/tweets/{tweet_id}/meta")
    async def meta(request: Request, tweet_id: str) -> JSONResponse:
        require_session(request)
        return JSONResponse(status_code=200, content=store.get_meta(tweet_id).to_json_dict())

    @app.post("/api/events/click")
    async def click(request: Request) -> JSONResponse:
        require_session(request)
        try:
            body = await request.json()
        except Exception:
            raise TweetFilterError("MALFORMED_EVENT", "body is not valid JSON") from None
        event = ClickEvent.from_json_dict(body)
        if event.receipt_id is not None:
            # Receipts are server-assigned; clients cannot pick their own.
            raise TweetFilterError("MALFORMED_EVENT", "receipt_id is not accepted on intake")
        receipt_id, _created = telemetry.record_click(event)
        return JSONResponse(status_code=202, content={"receipt_id": receipt_id})

    if static_dir:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


def build_app_from_config(config: ServiceConfig) -> FastAPI:
    """Wire stores, sessions and the optional startup corpus from config."""
    if config.database_path:
        store = FilterStore(SqliteStorage(config.database_path))
        telemetry: TelemetryStore = SqliteTelemetryStore(config.database_path)
    else:
        store = FilterStore(MemoryStorage())
        telemetry = MemoryTelemetryStore()
    if config.corpus_path:
        store.bulk_load(read_corpus_jsonl(config.corpus_path))
    sessions = SessionManager(
        UserTable.from_config_entries(config.users), ttl_seconds=config.session_ttl_seconds
    )
    return create_app(store, telemetry, sessions, static_dir=config.static_dir or None)
