"""0/1 transition matrices over a finite symbol alphabet.

A d x d matrix of bits defines both a one-dimensional shift of finite
type (rows index the current symbol, columns the allowed followers) and
a tree shift in which entry (i, j) = 1 permits symbol j on every child
of a node labeled i.

Two text formats are accepted: comma-separated row strings of 0/1
characters ("110,101,001") and a JSON array of arrays of 0/1 integers.
Row and column positions in error messages are 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class ParseError(ValueError):
    """Matrix text that does not describe a square 0/1 matrix."""

    def __init__(self, message: str, row: int | None = None, col: int | None = None):
        where = ""
        if row is not None:
            where = f" (row {row}" + (f", column {col}" if col is not None else "") + ")"
        super().__init__(message + where)
        self.row = row
        self.col = col


class NonSquare(ParseError):
    """Row lengths and row count disagree."""


class BadChar(ParseError):
    """An entry other than 0 or 1."""


class RowOrColumnZero(ValueError):
    """A symbol with no successors or no predecessors (dead symbol)."""


@dataclass(frozen=True)
class TransitionMatrix:
    """Immutable 0/1 adjacency data with display names for the symbols.

    Every row and every column must contain a 1: a symbol with no
    successors admits no labelings below it, and one with no
    predecessors never occurs below the root, so either would make the
    block counts of the shift meaningless.
    """

    rows: tuple[tuple[int, ...], ...]
    symbols: tuple[str, ...]

    def __post_init__(self):
        d = len(self.rows)
        if d < 1:
            raise ParseError("matrix needs at least one row")
        for i, row in enumerate(self.rows):
            if len(row) != d:
                raise NonSquare(f"expected {d} entries, found {len(row)}", row=i + 1)
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise BadChar(f"entry {e!r} is not 0 or 1", row=i + 1, col=j + 1)
        if len(self.symbols) != d or len(set(self.symbols)) != d:
            raise ParseError("need one distinct symbol name per row")
        for i, row in enumerate(self.rows):
            if not any(row):
                raise RowOrColumnZero(f"symbol {self.symbols[i]} has no successors (row {i + 1} is zero)")
        for j in range(d):
            if not any(row[j] for row in self.rows):
                raise RowOrColumnZero(f"symbol {self.symbols[j]} has no predecessors (column {j + 1} is zero)")

    @property
    def d(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, rows, symbols=None) -> "TransitionMatrix":
        tup = tuple(tuple(int(e) for e in row) for row in rows)
        if symbols is None:
            symbols = tuple(str(i + 1) for i in range(len(tup)))
        return cls(tup, tuple(symbols))

    def successor_table(self) -> tuple[tuple[int, ...], ...]:
        """successor_table()[i] lists the j with entry (i, j) = 1, ascending."""
        return tuple(tuple(j for j, e in enumerate(row) if e) for row in self.rows)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def to_row_string(self) -> str:
        return ",".join("".join(str(e) for e in row) for row in self.rows)


def parse_matrix(text: str, symbols=None) -> TransitionMatrix:
    """Parse either accepted text format into a TransitionMatrix."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty matrix text")
    if stripped.startswith("["):
        return _parse_json(stripped, symbols)
    return _parse_row_string(stripped, symbols)


def _parse_row_string(text: str, symbols) -> TransitionMatrix:
    tokens = [t.strip() for t in text.split(",")]
    d = len(tokens)
    rows = []
    for i, token in enumerate(tokens):
        if len(token) != d:
            raise NonSquare(f"{d} rows but {len(token)} entries", row=i + 1)
        entries = []
        for j, ch in enumerate(token):
            if ch not in "01":
                raise BadChar(f"character {ch!r} is not 0 or 1", row=i + 1, col=j + 1)
            entries.append(int(ch))
        rows.append(tuple(entries))
    return TransitionMatrix.from_rows(rows, symbols)


def _parse_json(text: str, symbols) -> TransitionMatrix:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON matrix: {exc}") from exc
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ParseError("JSON matrix must be a non-empty array of arrays")
    d = len(data)
    rows = []
    for i, row in enumerate(data):
        if len(row) != d:
            raise NonSquare(f"{d} rows but {len(row)} entries", row=i + 1)
        entries = []
        for j, e in enumerate(row):
            if not isinstance(e, int) or isinstance(e, bool) or e not in (0, 1):
                raise BadChar(f"entry {e!r} is not 0 or 1", row=i + 1, col=j + 1)
            entries.append(e)
        rows.append(tuple(entries))
    return TransitionMatrix.from_rows(rows, symbols)
