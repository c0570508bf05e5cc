"""SQLite plumbing: connections and versioned schema migrations.

Migrations are the numbered .sql files in tweetfilter/schema, applied in
order; PRAGMA user_version records how far a database has migrated.
"""

from __future__ import annotations

import re
import sqlite3
from importlib import resources
from pathlib import Path

_MIGRATION_RE = re.compile(r"^(\d+)_.+\.sql$")


def migration_files() -> list[tuple[int, str, str]]:
    """(version, name, sql) for every bundled migration, sorted."""
    out = []
    for entry in resources.files("tweetfilter").joinpath("schema").iterdir():
        m = _MIGRATION_RE.match(entry.name)
        if m:
            out.append((int(m.group(1)), entry.name, entry.read_text("utf-8")))
    out.sort()
    return out


def connect(path: str | Path) -> sqlite3.Connection:
    """Open (or create) a migrated database. ":memory:" works for tests."""
    conn = sqlite3.connect(str(path), check_same_thread=False)
    conn.row_factory = sqlite3.Row
    conn.execute("PRAGMA journal_mode=WAL")
    conn.execute("PRAGMA foreign_keys=ON")
    apply_migrations(conn)
    return conn


def apply_migrations(conn: sqlite3.Connection) -> int:
    """Bring the schema up to date; returns the resulting version."""
    current = conn.execute("PRAGMA user_version").fetchone()[0]
    for version, _name, sql in migration_files():
        if version > current:
            conn.executescript(sql)
            conn.execute(f"PRAGMA user_version = {version}")
            current = version
    conn.commit()
    return current
