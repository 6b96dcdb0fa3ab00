"""Shared exception types."""

from __future__ import annotations


class Inconclusive(RuntimeError):
    """A bounded procedure hit its work limit before reaching an answer.

    Carries whatever progress object the procedure had (search stats,
    partial design) so callers can report it.
    """

    def __init__(self, message: str, progress=None):
        super().__init__(message)
        self.progress = progress
