"""Service configuration: JSON file with environment-variable overrides.

Every field has a sane demo default so `serve` works against an in-memory
store with the bundled lexicon. Environment variables (TWEETFILTER_*) win
over the file, which wins over the defaults.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

ENV_OVERRIDES = {
    "TWEETFILTER_HOST": ("host", str),
    "TWEETFILTER_PORT": ("port", int),
    "TWEETFILTER_SESSION_TTL": ("session_ttl_seconds", int),
    "TWEETFILTER_DB": ("database_path", str),
    "TWEETFILTER_STATIC_DIR": ("static_dir", str),
    "TWEETFILTER_LEXICON": ("lexicon_path", str),
    "TWEETFILTER_BOT_PROVIDER": ("bot_provider", str),
    "TWEETFILTER_CORPUS": ("corpus_path", str),
}

DEFAULT_USERS = [
    {"username": "demo", "password": "demo-password"},
    {"username": "reviewer", "password": "reviewer-password"},
]


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    session_ttl_seconds: int = 24 * 3600
    database_path: str = ""  # empty -> in-memory stores
    static_dir: str = ""  # empty -> API only, no UI bundle
    lexicon_path: str = ""  # empty -> built-in lexicon
    stopwords_en_path: str = ""
    stopwords_es_path: str = ""
    bot_provider: str = "offline"  # offline | remote
    bot_fixture_path: str = ""  # optional handle -> score JSON for offline
    corpus_path: str = ""  # optional corpus JSONL loaded at startup
    users: list[dict] = field(default_factory=lambda: [dict(u) for u in DEFAULT_USERS])

    @classmethod
    def load(cls, path: str | Path | None = None, env: dict | None = None) -> "ServiceConfig":
        config = cls()
        if path:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
            for key, value in data.items():
                if not hasattr(config, key):
                    raise ValueError(f"unknown config key: {key}")
                setattr(config, key, value)
        env = os.environ if env is None else env
        for var, (attr, cast) in ENV_OVERRIDES.items():
            if var in env:
                setattr(config, attr, cast(env[var]))
        return config
