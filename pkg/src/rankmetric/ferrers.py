"""Partitions and right-aligned Ferrers diagrams.

Coordinates: row 0 is the top row, column 0 the leftmost column of the
``a x b`` bounding box.  Row r holds its dots in the last ``rows[r]`` columns.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import BadIndex


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts):
            raise ValueError("parts must be positive")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_summands(cls, summands) -> Partition:
        """Order-free constructor: ``1 + 1 + 3`` and ``3 + 1 + 1`` agree."""
        return cls(tuple(sorted(summands, reverse=True)))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def diagram(self) -> FerrersDiagram:
        return FerrersDiagram(self.parts)


@dataclass(frozen=True)
class FerrersDiagram:
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(x) for x in self.rows)
        if any(x <= 0 for x in rows):
            raise ValueError(f"row lengths must be positive: {rows}")
        if any(rows[k] < rows[k + 1] for k in range(len(rows) - 1)):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def parse(cls, text: str) -> FerrersDiagram:
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(x) for x in text.split(",")))

    @classmethod
    def rectangle(cls, a: int, b: int) -> FerrersDiagram:
        return cls((b,) * a if b > 0 else ())

    def __str__(self):
        return ",".join(str(x) for x in self.rows)

    @property
    def a(self) -> int:
        return len(self.rows)

    @property
    def b(self) -> int:
        return self.rows[0] if self.rows else 0

    @property
    def box(self) -> tuple[int, int]:
        return self.a, self.b

    @property
    def size(self) -> int:
        return sum(self.rows)

    @cached_property
    def dots(self) -> frozenset[tuple[int, int]]:
        b = self.b
        return frozenset((r, c) for r, length in enumerate(self.rows) for c in range(b - length, b))

    def column_counts(self) -> list[int]:
        """Dots per column, left to right."""
        b = self.b
        return [sum(1 for length in self.rows if c >= b - length) for c in range(b)]

    def render(self, dot: str = "*", blank: str = " ") -> str:
        b = self.b
        return "\n".join(blank * (b - length) + dot * length for length in self.rows)


def conjugate(F: FerrersDiagram) -> FerrersDiagram:
    """Transpose across the secondary diagonal: ``a x b`` becomes ``b x a``."""
    # new row k is old column b-1-k
    return FerrersDiagram(tuple(reversed(F.column_counts())))


def _check_index(d: int, i: int):
    if d < 1:
        raise BadIndex(f"d must be positive, got {d}")
    if not 0 <= i <= d - 1:
        raise BadIndex(f"i must lie in [0, {d - 1}], got {i}")


def v_count(F: FerrersDiagram, d: int, i: int) -> int:
    """Dots outside the first ``i`` rows and the rightmost ``d-1-i`` columns."""
    _check_index(d, i)
    j = d - 1 - i
    return sum(max(0, length - j) for length in F.rows[i:])


def v_count_bruteforce(F: FerrersDiagram, d: int, i: int) -> int:
    _check_index(d, i)
    cut = F.b - (d - 1 - i)
    return sum(1 for r, c in F.dots if r >= i and c < cut)


@dataclass(frozen=True)
class FerrersBound:
    exponent: int
    counts: tuple[int, ...]
    minimizers: tuple[int, ...]


def ferrers_bound_exponent(F: FerrersDiagram, d: int) -> FerrersBound:
    if d < 1:
        raise BadIndex(f"d must be positive, got {d}")
    counts = tuple(v_count(F, d, i) for i in range(d))
    low = min(counts)
    return FerrersBound(low, counts, tuple(i for i, v in enumerate(counts) if v == low))


def _reverse_lex_partitions(total: int, max_rows: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if max_rows == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _reverse_lex_partitions(total - first, max_rows - 1, first):
            yield (first,) + rest


def enumerate_diagrams(a: int, b: int, dots: int | None = None) -> Iterator[FerrersDiagram]:
    """Every diagram fitting an ``a x b`` box.

    Ordered by dot count, then reverse-lexicographically within one count
    (the usual ``4 = 3+1 = 2+2 = ...`` listing).  The empty diagram is only
    produced when ``dots=0`` is asked for.
    """
    totals = [dots] if dots is not None else range(1, a * b + 1)
    for t in totals:
        for rows in _reverse_lex_partitions(t, a, b):
            yield FerrersDiagram(rows)
