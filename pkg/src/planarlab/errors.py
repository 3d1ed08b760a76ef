"""Shared error types and the exhaustive-enumeration bound."""

from __future__ import annotations

import os

DEFAULT_MAX_N = 7


class EmptyClass(ValueError):
    """The requested graph class has no members."""


class BoundExceeded(ValueError):
    """Exhaustive enumeration requested above the configured bound."""


def max_n() -> int:
    """Largest n for exhaustive scans; PLANARLAB_MAX_N overrides the default 7."""
    return int(os.environ.get("PLANARLAB_MAX_N", DEFAULT_MAX_N))
