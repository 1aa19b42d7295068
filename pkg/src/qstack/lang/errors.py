"""Diagnostics for the text front-ends."""

from __future__ import annotations


class ParseError(Exception):
    """Source-text rejection with a 1-based line/column position."""

    def __init__(self, line: int, column: int, message: str):
        self.line = max(1, int(line))
        self.column = max(1, int(column))
        self.message = message
        super().__init__(f"{self.line}:{self.column}: {message}")


class UnsupportedConstructError(ValueError):
    """Raised by emitters for circuits outside a dialect's subset."""

    def __init__(self, index: int, message: str):
        self.index = index
        super().__init__(f"instruction {index}: {message}")
