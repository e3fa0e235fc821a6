"""Shared exception types."""

from __future__ import annotations


class LimitError(ValueError):
    """A size guard was exceeded (raise the limit explicitly to proceed)."""


class TreeParseError(ValueError):
    """Malformed bracket-format tree text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class WalkError(ValueError):
    """Invalid walk: the offending move index is attached."""

    def __init__(self, message: str, index: int):
        super().__init__(f"{message} (move index {index})")
        self.index = index
