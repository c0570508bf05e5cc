"""Click telemetry: idempotent intake and time-ranged JSONL export.

Events are append-only. (session_id, client_seq) is the idempotency key, so
a client on a flaky network can resubmit blindly: the original receipt
comes back and nothing is double-counted. Export is ordered by
(client_timestamp, receipt_id) over a half-open [from, to) range and
round-trips through the same JSON schema.
"""

from __future__ import annotations

import json
import sqlite3
import threading
import uuid
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from pathlib import Path
from typing import IO

from .db import connect
from .errors import TweetFilterError


def iso_utc(moment: datetime) -> str:
    """Normalized ISO-8601 UTC with microseconds; lexicographic order is
    chronological order for strings produced here."""
    if moment.tzinfo is None:
        moment = moment.replace(tzinfo=timezone.utc)
    return moment.astimezone(timezone.utc).isoformat(timespec="microseconds")


def parse_iso_utc(value: str) -> datetime:
    try:
        parsed = datetime.fromisoformat(value.replace("Z", "+00:00"))
    except (TypeError, ValueError) as exc:
        raise TweetFilterError("MALFORMED_EVENT", f"bad timestamp {value!r}: {exc}") from exc
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed.astimezone(timezone.utc)


@dataclass(frozen=True)
class ClickEvent:
    session_id: str
    user_id: str
    target: str
    client_timestamp: datetime
    client_seq: int
    tweet_id: str | None = None
    receipt_id: str | None = None

    @classmethod
    def from_json_dict(cls, obj) -> "ClickEvent":
        if not isinstance(obj, dict):
            raise TweetFilterError("MALFORMED_EVENT", "event body must be a JSON object")
        for field_name in ("session_id", "user_id", "target", "client_timestamp"):
            value = obj.get(field_name)
            if not isinstance(value, str) or not value.strip():
                raise TweetFilterError("MALFORMED_EVENT", f"missing or empty field: {field_name}")
        seq = obj.get("client_seq")
        if not isinstance(seq, int) or isinstance(seq, bool) or seq < 0:
            raise TweetFilterError("MALFORMED_EVENT", "client_seq must be a non-negative integer")
        tweet_id = obj.get("tweet_id")
        if tweet_id is not None and not isinstance(tweet_id, str):
            raise TweetFilterError("MALFORMED_EVENT", "tweet_id must be a string when present")
        receipt = obj.get("receipt_id")
        return cls(
            session_id=obj["session_id"],
            user_id=obj["user_id"],
            target=obj["target"],
            client_timestamp=parse_iso_utc(obj["client_timestamp"]),
            client_seq=seq,
            tweet_id=tweet_id,
            receipt_id=receipt if isinstance(receipt, str) and receipt else None,
        )

    def to_json_dict(self) -> dict:
        out = {
            "session_id": self.session_id,
            "user_id": self.user_id,
            "target": self.target,
            "tweet_id": self.tweet_id,
            "client_timestamp": iso_utc(self.client_timestamp),
            "client_seq": self.client_seq,
        }
        if self.receipt_id:
            out["receipt_id"] = self.receipt_id
        return out


class TelemetryStore:
    """Intake/export contract shared by the memory and sqlite stores."""

    def record_click(self, event: ClickEvent) -> tuple[str, bool]:
        """(receipt_id, stored): stored is False on an idempotent replay."""
        raise NotImplementedError

    def export_events(self, start: datetime, end: datetime) -> list[ClickEvent]:
        raise NotImplementedError

    def count(self) -> int:
        raise NotImplementedError

    def import_events(self, events: list[ClickEvent]) -> int:
        """Re-ingest exported events, preserving receipt ids; returns stored count."""
        stored = 0
        for event in events:
            _, created = self.record_click(event)
            stored += created
        return stored


def _assign_receipt(event: ClickEvent) -> ClickEvent:
    return event if event.receipt_id else replace(event, receipt_id=uuid.uuid4().hex)


def _check_range(start: datetime, end: datetime) -> tuple[datetime, datetime]:
    if start.tzinfo is None:
        start = start.replace(tzinfo=timezone.utc)
    if end.tzinfo is None:
        end = end.replace(tzinfo=timezone.utc)
    if start > end:
        raise TweetFilterError("INVALID_RANGE", "export range must satisfy from <= to")
    return start, end


class MemoryTelemetryStore(TelemetryStore):
    def __init__(self):
        self._events: dict[tuple[str, int], ClickEvent] = {}
        self._lock = threading.Lock()

    def record_click(self, event: ClickEvent) -> tuple[str, bool]:
        key = (event.session_id, event.client_seq)
        with self._lock:
            existing = self._events.get(key)
            if existing is not None:
                return existing.receipt_id, False
            stored = _assign_receipt(event)
            self._events[key] = stored
            return stored.receipt_id, True

    def export_events(self, start: datetime, end: datetime) -> list[ClickEvent]:
        start, end = _check_range(start, end)
        with self._lock:
            snapshot = list(self._events.values())
        selected = [e for e in snapshot if start <= e.client_timestamp < end]
        selected.sort(key=lambda e: (iso_utc(e.client_timestamp), e.receipt_id))
        return selected

    def count(self) -> int:
        with self._lock:
            return len(self._events)


class SqliteTelemetryStore(TelemetryStore):
    """Durable store; the UNIQUE (session_id, client_seq) constraint is what
    makes concurrent duplicate submissions safe."""

    def __init__(self, path: str | Path):
        self._conn = connect(path)
        self._lock = threading.Lock()

    def record_click(self, event: ClickEvent) -> tuple[str, bool]:
        stored = _assign_receipt(event)
        row = (
            stored.receipt_id,
            stored.session_id,
            stored.client_seq,
            stored.user_id,
            stored.target,
            stored.tweet_id,
            iso_utc(stored.client_timestamp),
        )
        try:
            with self._lock, self._conn:
                cursor = self._conn.execute(
                    "INSERT INTO click_events (receipt_id, session_id, client_seq, user_id, target,"
                    " tweet_id, client_timestamp) VALUES (?, ?, ?, ?, ?, ?, ?)"
                    " ON CONFLICT (session_id, client_seq) DO NOTHING",
                    row,
                )
                if cursor.rowcount:
                    return stored.receipt_id, True
                existing = self._conn.execute(
                    "SELECT receipt_id FROM click_events WHERE session_id = ? AND client_seq = ?",
                    (stored.session_id, stored.client_seq),
                ).fetchone()
                return existing["receipt_id"], False
        except sqlite3.Error as exc:
            raise TweetFilterError("STORAGE_FAILURE", f"telemetry write failed: {exc}") from exc

    def export_events(self, start: datetime, end: datetime) -> list[ClickEvent]:
        start, end = _check_range(start, end)
        try:
            with self._lock:
                rows = self._conn.execute(
                    "SELECT * FROM click_events WHERE client_timestamp >= ? AND client_timestamp < ?"
                    " ORDER BY client_timestamp, receipt_id",
                    (iso_utc(start), iso_utc(end)),
                ).fetchall()
        except sqlite3.Error as exc:
            raise TweetFilterError("STORAGE_FAILURE", f"telemetry read failed: {exc}") from exc
        return [
            ClickEvent(
                session_id=row["session_id"],
                user_id=row["user_id"],
                target=row["target"],
                client_timestamp=parse_iso_utc(row["client_timestamp"]),
                client_seq=row["client_seq"],
                tweet_id=row["tweet_id"],
                receipt_id=row["receipt_id"],
            )
            for row in rows
        ]

    def count(self) -> int:
        with self._lock:
            return self._conn.execute("SELECT COUNT(*) AS n FROM click_events").fetchone()["n"]

    def close(self) -> None:
        self._conn.close()


def export_jsonl(store: TelemetryStore, start: datetime, end: datetime, dest: IO[str] | str | Path) -> int:
    """Write the export stream as JSONL; returns the event count."""
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="utf-8", newline="\n") as fh:
            return export_jsonl(store, start, end, fh)
    events = store.export_events(start, end)
    for event in events:
        dest.write(json.dumps(event.to_json_dict(), ensure_ascii=False))
        dest.write("\n")
    return len(events)


def read_events_jsonl(src: IO[str] | str | Path) -> list[ClickEvent]:
    if isinstance(src, (str, Path)):
        with open(src, "r", encoding="utf-8") as fh:
            return read_events_jsonl(fh)
    return [ClickEvent.from_json_dict(json.loads(line)) for line in src if line.strip()]
