"""Integer partitions, their Young diagrams and a few counting helpers."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

__all__ = [
    "Partition",
    "Bipartition",
    "partitions",
    "partition_count",
    "distinct_part_partitions",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> lam = Partition([2, 1])
    >>> lam.size, lam.conjugate()
    (3, Partition([2, 1]))
    >>> [b.content for b in lam.boxes()]
    [0, 1, -1]
    >>> str(Partition.parse("3,1"))
    '3,1'
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        parts = tuple(p for p in parts if p)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts of a partition must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()")
        if not text:
            return cls(())
        return cls(sorted((int(t) for t in text.split(",")), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition(())
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def boxes(self) -> list["Box"]:
        """Boxes in reading order: left to right along each row, rows top to bottom."""
        return [Box(i, j) for i, row in enumerate(self, start=1) for j in range(1, row + 1)]

    def contents(self) -> list[int]:
        return [b.content for b in self.boxes()]

    def is_row_end(self, box: "Box") -> bool:
        return box.col == self[box.row - 1]

    def is_column_bottom(self, box: "Box") -> bool:
        return box.row == len(self) or self[box.row] < box.col

    def label(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return f"Partition({list(self)})"

    @classmethod
    def from_content_counts(cls, counts: dict[int, int]) -> "Partition":
        """Rebuild a partition from the number of boxes on each diagonal.

        Raises ``ValueError`` if the counts do not describe a Young diagram.
        """
        cells = set()
        for c, d in counts.items():
            for t in range(1, d + 1):
                cells.add((t, t + c) if c >= 0 else (t - c, t))
        rows: dict[int, int] = {}
        for i, j in cells:
            rows[i] = rows.get(i, 0) + 1
        lam = [rows.get(i, 0) for i in range(1, len(rows) + 1)]
        shape = cls(sorted(lam, reverse=True))
        if list(shape) != lam or {(b.row, b.col) for b in shape.boxes()} != cells:
            raise ValueError(f"content counts {counts} do not form a Young diagram")
        return shape


class Box(tuple):
    __slots__ = ()

    def __new__(cls, row: int, col: int):
        return super().__new__(cls, (row, col))

    @property
    def row(self) -> int:
        return self[0]

    @property
    def col(self) -> int:
        return self[1]

    @property
    def content(self) -> int:
        return self[1] - self[0]


class Bipartition(tuple):
    """A pair of partitions; text form ``"3,1|2"``."""

    def __new__(cls, first, second):
        return super().__new__(cls, (Partition(first), Partition(second)))

    @property
    def size(self) -> int:
        return self[0].size + self[1].size

    def swap(self) -> "Bipartition":
        return Bipartition(self[1], self[0])

    @classmethod
    def parse(cls, text: str) -> "Bipartition":
        left, _, right = text.partition("|")
        return cls(Partition.parse(left), Partition.parse(right))

    def __str__(self):
        return f"{self[0]}|{self[1]}"

    def __repr__(self):
        return f"Bipartition({list(self[0])}, {list(self[1])})"


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    largest = n if largest is None else min(largest, n)
    if n == 0:
        yield Partition(())
        return
    for first in range(largest, 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """The partition number p(n) by the standard dynamic programme."""
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def distinct_part_partitions(total: int, parity: int) -> list[tuple[int, ...]]:
    """Partitions of ``total`` into distinct parts congruent to ``parity`` mod 2.

    Parts are returned in ascending order; ``parity`` 0 excludes the part 0.
    """
    out: list[tuple[int, ...]] = []

    def grow(remaining, smallest, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        p = smallest
        while p <= remaining:
            grow(remaining - p, p + 2, acc + [p])
            p += 2

    start = 1 if parity % 2 else 2
    grow(total, start, [])
    return sorted(out)
