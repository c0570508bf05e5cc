"""Error registry shared by the library, the CLI, and the HTTP layer.

Every failure that can cross a module boundary carries a machine-readable
code from ERROR_REGISTRY plus a human-readable message. The HTTP layer maps
the code to its registered status; library callers catch TweetFilterError
and branch on .code.
"""

from __future__ import annotations

# code -> default HTTP status
ERROR_REGISTRY = {
    "UNDECODABLE_INPUT": 400,
    "MISSING_REQUIRED_COLUMN": 400,
    "UNKNOWN_LABEL": 400,
    "MISSING_FACT_CHECK": 400,
    "OUT_OF_RANGE": 400,
    "PROVIDER_UNAVAILABLE": 503,
    "MUTUALLY_EXCLUSIVE_FILTERS": 400,
    "INVALID_FILTER_VALUE": 400,
    "INVALID_PAGINATION": 400,
    "NOT_FOUND": 404,
    "INVALID_CREDENTIALS": 401,
    "UNAUTHENTICATED": 401,
    "MALFORMED_EVENT": 400,
    "STORAGE_FAILURE": 500,
    "INVALID_RANGE": 400,
    "METHOD_NOT_ALLOWED": 405,
    "INTERNAL_ERROR": 500,
}


class TweetFilterError(Exception):
    """Domain error with a registry code and an HTTP status."""

    def __init__(self, code: str, message: str, http_status: int | None = None):
        if code not in ERROR_REGISTRY:
            raise ValueError(f"unregistered error code: {code}")
        super().__init__(message)
        self.code = code
        self.message = message
        self.http_status = http_status if http_status is not None else ERROR_REGISTRY[code]

    def to_payload(self) -> dict:
        return {"code": self.code, "message": self.message}

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"TweetFilterError({self.code!r}, {self.message!r}, {self.http_status})"
