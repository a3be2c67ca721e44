"""Exact integer predicates and bounding-box arithmetic.

All operations are pure functions on immutable values; coordinates are
plain Python integers, so every determinant is evaluated exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import EmptyInputError, PointOutsideBoxError


class Point(NamedTuple):
    """A 2-D grid point. Compares, sorts and hashes like the tuple (x, y)."""

    x: int
    y: int


@dataclass(frozen=True)
class BoundingBox:
    """Tightest axis-aligned box around a point set.

    Side lengths are inclusive cell counts, so a single point yields
    m1 = m2 = m = 1.
    """

    x_min: int
    x_max: int
    y_min: int
    y_max: int

    def __post_init__(self) -> None:
        if self.x_min > self.x_max or self.y_min > self.y_max:
            raise ValueError("bounding box extents are inverted")

    @property
    def m1(self) -> int:
        return self.x_max - self.x_min + 1

    @property
    def m2(self) -> int:
        return self.y_max - self.y_min + 1

    @property
    def m(self) -> int:
        """Area of the box in grid cells, the range of any rank function on it."""
        return self.m1 * self.m2

    def contains(self, p: Point) -> bool:
        return self.x_min <= p[0] <= self.x_max and self.y_min <= p[1] <= self.y_max


def orientation(v0: Point, v1: Point, v2: Point) -> int:
    """Orientation of v2 relative to the directed line v0 -> v1.

    +1  v2 strictly to the left (counter-clockwise turn)
     0  collinear
    -1  strictly to the right (clockwise turn)

    Sign of the cross product (v1 - v0) x (v2 - v0), evaluated in exact
    integer arithmetic.
    """
    cross = (v1[0] - v0[0]) * (v2[1] - v0[1]) - (v1[1] - v0[1]) * (v2[0] - v0[0])
    if cross > 0:
        return 1
    if cross < 0:
        return -1
    return 0


def bounding_box(points: Sequence[Point]) -> BoundingBox:
    """Tightest axis-aligned bounding box of a non-empty point sequence."""
    if not points:
        raise EmptyInputError("cannot bound an empty point set")
    xs, ys = zip(*points)
    return BoundingBox(min(xs), max(xs), min(ys), max(ys))


def normalize(points: Iterable[Point], box: BoundingBox) -> list[Point]:
    """Translate points so the box corner maps to (1, 1).

    Every output coordinate satisfies 1 <= x' <= m1 and 1 <= y' <= m2;
    input order is preserved.
    """
    pts = list(points)
    if not pts:
        return []
    xs, ys = zip(*pts)
    if (min(xs) < box.x_min or max(xs) > box.x_max
            or min(ys) < box.y_min or max(ys) > box.y_max):
        offender = next(p for p in pts if not box.contains(p))
        raise PointOutsideBoxError(f"point {tuple(offender)} lies outside {box}")
    dx = box.x_min - 1
    dy = box.y_min - 1
    return [Point(x - dx, y - dy) for x, y in pts]


def denormalize(points: Iterable[Point], box: BoundingBox) -> list[Point]:
    """Exact inverse of :func:`normalize` for the same box."""
    dx = box.x_min - 1
    dy = box.y_min - 1
    return [Point(x + dx, y + dy) for x, y in points]
