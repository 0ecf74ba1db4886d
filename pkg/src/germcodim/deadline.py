"""Cooperative time limits for long pipeline stages."""
from __future__ import annotations

import contextvars
import time
from contextlib import contextmanager

from .errors import StageTimeout

_deadline: contextvars.ContextVar = contextvars.ContextVar("deadline", default=None)
_stage: contextvars.ContextVar = contextvars.ContextVar("stage", default=(None, None))


@contextmanager
def time_limit(seconds: float | None):
    token = _deadline.set(time.monotonic() + seconds if seconds else None)
    try:
        yield
    finally:
        _deadline.reset(token)


def set_stage(name: str, last_completed: str | None):
    _stage.set((name, last_completed))


def check():
    d = _deadline.get()
    if d is not None and time.monotonic() > d:
        stage, last = _stage.get()
        raise StageTimeout(stage, last)
