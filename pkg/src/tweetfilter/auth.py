"""Session-token access control with seeded demo users.

Passwords are stored as salted PBKDF2 hashes; sign-in failures are
indistinguishable between unknown user and wrong password (same error,
same body, and a dummy hash verification so timing does not enumerate
usernames). Tokens are 256-bit URL-safe strings with a configurable TTL.
"""

from __future__ import annotations

import hashlib
import hmac
import secrets
import threading
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from typing import Callable

from .errors import TweetFilterError

DEFAULT_TTL_SECONDS = 24 * 3600
PBKDF2_ITERATIONS = 100_000


def hash_password(password: str, salt: bytes | None = None, iterations: int = PBKDF2_ITERATIONS) -> str:
    """Encode as pbkdf2_sha256$<iterations>$<salt_hex>$<hash_hex>."""
    salt = salt if salt is not None else secrets.token_bytes(16)
    digest = hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"), salt, iterations)
    return f"pbkdf2_sha256${iterations}${salt.hex()}${digest.hex()}"


def verify_password(password: str, encoded: str) -> bool:
    try:
        scheme, iterations, salt_hex, hash_hex = encoded.split("$")
        if scheme != "pbkdf2_sha256":
            return False
        digest = hashlib.pbkdf2_hmac(
            "sha256", password.encode("utf-8"), bytes.fromhex(salt_hex), int(iterations)
        )
        return hmac.compare_digest(digest.hex(), hash_hex)
    except (ValueError, TypeError):
        return False


@dataclass(frozen=True)
class SessionToken:
    token: str
    user_id: str
    issued_at: datetime
    expires_at: datetime


class UserTable:
    """Seeded users only; there is no self-registration."""

    def __init__(self, users: dict[str, str]):
        """users maps username -> encoded password hash."""
        self._users = dict(users)
        # Burned on unknown usernames so both failure paths hash once.
        self._decoy = hash_password(secrets.token_hex(8))

    @classmethod
    def from_config_entries(cls, entries: list[dict]) -> "UserTable":
        """Entries carry either a password_hash or a plaintext demo password
        (hashed on load); both verify through the same salted-hash path."""
        users = {}
        for entry in entries:
            username = entry["username"]
            if "password_hash" in entry:
                users[username] = entry["password_hash"]
            else:
                users[username] = hash_password(entry["password"])
        return cls(users)

    def check(self, username: str, password: str) -> bool:
        encoded = self._users.get(username)
        if encoded is None:
            verify_password(password, self._decoy)
            return False
        return verify_password(password, encoded)


class SessionManager:
    def __init__(
        self,
        users: UserTable,
        ttl_seconds: int = DEFAULT_TTL_SECONDS,
        clock: Callable[[], datetime] | None = None,
    ):
        self._users = users
        self._ttl = timedelta(seconds=ttl_seconds)
        self._clock = clock or (lambda: datetime.now(timezone.utc))
        self._sessions: dict[str, SessionToken] = {}
        self._lock = threading.Lock()

    def sign_in(self, username: str, password: str) -> SessionToken:
        if not isinstance(username, str) or not isinstance(password, str) or not self._users.check(username, password):
            raise TweetFilterError("INVALID_CREDENTIALS", "invalid username or password")
        now = self._clock()
        session = SessionToken(
            token=secrets.token_urlsafe(32),
            user_id=username,
            issued_at=now,
            expires_at=now + self._ttl,
        )
        with self._lock:
            self._sessions[session.token] = session
        return session

    def authenticate(self, token: str | None) -> SessionToken:
        if not token:
            raise TweetFilterError("UNAUTHENTICATED", "missing bearer token")
        with self._lock:
            session = self._sessions.get(token)
        if session is None:
            raise TweetFilterError("UNAUTHENTICATED", "unknown session token")
        if self._clock() >= session.expires_at:
            with self._lock:
                self._sessions.pop(token, None)
            raise TweetFilterError("UNAUTHENTICATED", "session expired")
        return session
