"""Deadline arithmetic. The server clock is the only time authority."""
from __future__ import annotations

from datetime import datetime, timedelta

from ..errors import ClockSkew


def deadline_for(started_at: datetime, duration_minutes: int) -> datetime:
    if duration_minutes < 1:
        raise ValueError("duration must be at least one minute")
    return started_at + timedelta(minutes=duration_minutes)


def remaining_seconds(now: datetime, started_at: datetime, duration_minutes: int) -> int:
    """Whole seconds until the deadline, clamped at zero."""
    if now < started_at:
        raise ClockSkew("now precedes the attempt start")
    left = deadline_for(started_at, duration_minutes) - now
    return max(0, int(left.total_seconds()))
