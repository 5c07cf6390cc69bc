"""Opaque bearer session tokens, held in server memory.

128-bit random tokens, 8-hour expiry. Tokens are never derived from
account data; restart invalidates all sessions (clients re-login).
"""
from __future__ import annotations

import secrets
import threading
from dataclasses import dataclass
from datetime import datetime, timedelta

TOKEN_TTL = timedelta(hours=8)


@dataclass(frozen=True)
class Session:
    token: str
    account_id: str
    issued_at: datetime
    expires_at: datetime


class SessionRegistry:
    def __init__(self):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def issue(self, account_id: str, now: datetime) -> Session:
        session = Session(
            token=secrets.token_hex(16),
            account_id=account_id,
            issued_at=now,
            expires_at=now + TOKEN_TTL,
        )
        with self._lock:
            self._sessions[session.token] = session
        return session

    def resolve(self, token: str, now: datetime) -> str | None:
        """Account id for a live token, else None."""
        with self._lock:
            session = self._sessions.get(token)
            if session is None:
                return None
            if now >= session.expires_at:
                del self._sessions[token]
                return None
            return session.account_id

    def revoke(self, token: str) -> None:
        with self._lock:
            self._sessions.pop(token, None)
