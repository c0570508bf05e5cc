"""Corpus persistence and the query façade.

Storage backends hold the annotated records in stable ingest order; the
FilterStore keeps an immutable in-memory snapshot (records, id lookup,
columnar index) that readers grab with one attribute read, so queries never
lock. bulk_load swaps the whole snapshot: concurrent readers see either the
old corpus or the new one, never a mix.
"""

from __future__ import annotations

import json
import sqlite3
import threading
from dataclasses import dataclass
from pathlib import Path

from .db import connect
from .errors import TweetFilterError
from .filtering import FilterQuery, MetaInfo, Page, matches, validate_filter
from .kernel import ColumnarIndex
from .records import Corpus, TweetRecord


class StorageBackend:
    """Minimal persistence contract: replace everything, read everything."""

    def replace_all(self, records: list[TweetRecord]) -> None:
        raise NotImplementedError

    def fetch_all(self) -> list[TweetRecord]:
        raise NotImplementedError


class MemoryStorage(StorageBackend):
    def __init__(self):
        self._records: list[TweetRecord] = []

    def replace_all(self, records: list[TweetRecord]) -> None:
        self._records = list(records)

    def fetch_all(self) -> list[TweetRecord]:
        return list(self._records)


class SqliteStorage(StorageBackend):
    def __init__(self, path: str | Path):
        self._conn = connect(path)
        self._lock = threading.Lock()

    def replace_all(self, records: list[TweetRecord]) -> None:
        rows = [
            (r.id, position, json.dumps(r.to_json_dict(), ensure_ascii=False))
            for position, r in enumerate(records)
        ]
        try:
            with self._lock, self._conn:
                self._conn.execute("DELETE FROM tweets")
                self._conn.executemany("INSERT INTO tweets (id, position, record) VALUES (?, ?, ?)", rows)
        except sqlite3.Error as exc:
            raise TweetFilterError("STORAGE_FAILURE", f"corpus write failed: {exc}") from exc

    def fetch_all(self) -> list[TweetRecord]:
        try:
            with self._lock:
                rows = self._conn.execute("SELECT record FROM tweets ORDER BY position").fetchall()
        except sqlite3.Error as exc:
            raise TweetFilterError("STORAGE_FAILURE", f"corpus read failed: {exc}") from exc
        return [TweetRecord.from_json_dict(json.loads(row["record"])) for row in rows]

    def close(self) -> None:
        self._conn.close()


@dataclass(frozen=True)
class LoadReport:
    inserted: int
    replaced: int


class _Snapshot:
    __slots__ = ("records", "by_id", "index")

    def __init__(self, records: list[TweetRecord]):
        self.records = tuple(records)
        self.by_id = {r.id: r for r in records}
        self.index = ColumnarIndex(records)


class FilterStore:
    """Validated tri-state queries, meta projections and corpus loads."""

    def __init__(self, storage: StorageBackend | None = None):
        self._storage = storage or MemoryStorage()
        self._write_lock = threading.Lock()
        self._snapshot = _Snapshot(self._storage.fetch_all())

    def __len__(self) -> int:
        return self._snapshot.index.size

    @property
    def records(self) -> tuple[TweetRecord, ...]:
        return self._snapshot.records

    def bulk_load(self, corpus: Corpus) -> LoadReport:
        """Replace the stored corpus; reloading the same corpus is idempotent."""
        with self._write_lock:
            previous_ids = set(self._snapshot.by_id)
            self._storage.replace_all(corpus.records)
            snapshot = _Snapshot(corpus.records)
            inserted = sum(1 for record_id in snapshot.by_id if record_id not in previous_ids)
            replaced = len(snapshot.by_id) - inserted
            self._snapshot = snapshot
        return LoadReport(inserted=inserted, replaced=replaced)

    def match_ids(self, q: FilterQuery) -> list[str]:
        """All matching ids in stable corpus order (no pagination)."""
        validate_filter(q)
        snapshot = self._snapshot
        return [snapshot.records[i].id for i in snapshot.index.matching_positions(q)]

    def query(self, q: FilterQuery) -> Page:
        """Page of matching records; a page past the end is empty, not an error."""
        validate_filter(q)
        snapshot = self._snapshot
        positions = snapshot.index.matching_positions(q)
        start = (q.page - 1) * q.page_size
        items = [snapshot.records[i] for i in positions[start : start + q.page_size]]
        return Page(items=items, page=q.page, page_size=q.page_size, total_matching=int(positions.size))

    def get_meta(self, tweet_id: str) -> MetaInfo:
        record = self._snapshot.by_id.get(tweet_id)
        if record is None:
            raise TweetFilterError("NOT_FOUND", f"no tweet with id {tweet_id!r}")
        return MetaInfo.from_record(record)

    def linear_scan(self, q: FilterQuery) -> list[str]:
        """Scalar-predicate scan, kept for cross-checking the kernel path."""
        validate_filter(q)
        return [r.id for r in self._snapshot.records if matches(r, q)]
