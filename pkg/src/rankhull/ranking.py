"""Grid rank functions and the simple-chain ordering they induce.

A rank function is a bijection from the normalized grid [1..m1] x [1..m2]
onto [1..m]. Visiting points by ascending rank traces a zig-zag over the
grid columns (or rows), which is a simple polygonal chain on any subset of
grid points: exactly the ordering a single-pass hull scan needs, obtained
without a comparison sort.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import DuplicatePointError, OutOfGridError, RankOutOfRangeError
from .geometry import Point


class RankVariant(Enum):
    """Grid traversal order. Values double as the CLI spelling."""

    COLUMN_MAJOR = "f1"
    ROW_MAJOR = "f2"


@dataclass(frozen=True)
class RankFunction:
    """A bijection between grid points and ranks 1..m.

    Column-major ranks column by column, bottom to top:
    rank(i, j) = (i - 1) * m2 + j. Row-major is the transpose:
    rank(i, j) = (j - 1) * m1 + i. Both invert with one divmod.
    """

    variant: RankVariant
    m1: int
    m2: int

    def __post_init__(self) -> None:
        if self.m1 < 1 or self.m2 < 1:
            raise ValueError("grid sides must be at least 1")

    @property
    def m(self) -> int:
        return self.m1 * self.m2

    def rank(self, v: Point) -> int:
        x, y = v
        if not (1 <= x <= self.m1 and 1 <= y <= self.m2):
            raise OutOfGridError(
                f"{(x, y)} outside normalized grid {self.m1}x{self.m2}"
            )
        if self.variant is RankVariant.COLUMN_MAJOR:
            return (x - 1) * self.m2 + y
        return (y - 1) * self.m1 + x

    def unrank(self, r: int) -> Point:
        if not 1 <= r <= self.m:
            raise RankOutOfRangeError(f"rank {r} outside [1, {self.m}]")
        if self.variant is RankVariant.COLUMN_MAJOR:
            q, rem = divmod(r - 1, self.m2)
            return Point(q + 1, rem + 1)
        q, rem = divmod(r - 1, self.m1)
        return Point(rem + 1, q + 1)


def chain_order(points: Sequence[Point], rf: RankFunction) -> list[int]:
    """Indices of `points` in ascending-rank order.

    The polyline visiting the points in this order is a simple chain.
    Realized by scattering indices into a rank-indexed table and reading
    it back, so no comparison sort is involved; the pipeline obtains the
    same order through the blocked bit table instead.
    """
    slots: list[int | None] = [None] * rf.m
    for idx, v in enumerate(points):
        k = rf.rank(v) - 1
        if slots[k] is not None:
            raise DuplicatePointError(f"points {slots[k]} and {idx} share rank {k + 1}")
        slots[k] = idx
    return [idx for idx in slots if idx is not None]
