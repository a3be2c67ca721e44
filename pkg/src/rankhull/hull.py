"""Single-pass deque hull over a simple chain, plus an independent oracle.

The hull is strict: no collinear vertices are retained, so every point
set has exactly one canonical hull cycle (counter-clockwise, starting at
the lexicographically smallest vertex). Inputs with fewer than three
distinct non-collinear points yield degenerate polygons rather than
errors.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .geometry import Point, orientation


@dataclass(frozen=True)
class HullPolygon:
    """Hull vertex cycle in CCW order from the lexicographic minimum.

    `degenerate` marks 0-, 1- and 2-vertex results (empty, single point,
    or the two extremes of a collinear set).
    """

    vertices: tuple[Point, ...]
    degenerate: bool = False

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass
class MelkmanStats:
    """Operation counts from one hull scan.

    `isleft_evals` is the number of orientation tests actually evaluated.
    `deque_ops` counts point placements plus copy removals: a placement
    puts the point at both ends of the deque at once, and each of its two
    copies can later be removed at most once, so deque_ops <= 3n + seed.
    """

    isleft_evals: int = 0
    deque_ops: int = 0


def _canonical(cycle: list[Point]) -> tuple[Point, ...]:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:] + cycle[:k])


def _degenerate(points: Iterable[Point]) -> HullPolygon:
    uniq = sorted(set(points))
    if not uniq:
        return HullPolygon((), degenerate=True)
    if len(uniq) == 1:
        return HullPolygon((uniq[0],), degenerate=True)
    # collinear by construction: lexicographic extremes are the endpoints
    return HullPolygon((uniq[0], uniq[-1]), degenerate=True)


def melkman(chain: Sequence[Point], stats: MelkmanStats | None = None) -> HullPolygon:
    """Convex hull of a simple polygonal chain in one pass.

    The deque holds the hull of the points scanned so far as a cycle whose
    two ends are the most recently added vertex. Each new point is tested
    against the two support edges at the deque ends: left of both means it
    is interior and is dropped; otherwise vertices are popped from the top
    and/or deleted from the bottom until convexity is restored and the
    point becomes the new seam. Pops use non-strict tests so collinear
    vertices never survive.

    The chain must be simple and its points distinct (the rank pipeline
    guarantees both). Fully collinear chains and chains of fewer than
    three points produce degenerate polygons.
    """
    pts = chain if isinstance(chain, list) else list(chain)
    if stats is None:
        stats = MelkmanStats()
    if len(pts) < 3:
        return _degenerate(pts)

    it = iter(pts)
    a = next(it)
    b = next(it)
    evals = 0
    turn = 0
    for c in it:
        evals += 1
        turn = orientation(a, b, c)
        if turn != 0:
            break
        b = c  # collinear prefix is monotone on a simple chain; keep extremes
    if turn == 0:
        stats.isleft_evals += evals
        return _degenerate([a, b])

    dq = deque((c, a, b, c)) if turn > 0 else deque((c, b, a, c))
    placed = 3
    removed = 0
    b0, b1, t1, t0 = dq[0], dq[1], dq[-2], dq[-1]
    for v in it:
        vx, vy = v
        evals += 1
        if (b1[0] - b0[0]) * (vy - b0[1]) - (b1[1] - b0[1]) * (vx - b0[0]) > 0:
            evals += 1
            if (t0[0] - t1[0]) * (vy - t1[1]) - (t0[1] - t1[1]) * (vx - t1[0]) > 0:
                continue
        while len(dq) > 2:
            evals += 1
            p, q = dq[-2], dq[-1]
            if (q[0] - p[0]) * (vy - p[1]) - (q[1] - p[1]) * (vx - p[0]) > 0:
                break
            dq.pop()
            removed += 1
        dq.append(v)
        while len(dq) > 2:
            evals += 1
            p, q = dq[0], dq[1]
            if (q[0] - p[0]) * (vy - p[1]) - (q[1] - p[1]) * (vx - p[0]) > 0:
                break
            dq.popleft()
            removed += 1
        dq.appendleft(v)
        placed += 1
        b0, b1, t1, t0 = dq[0], dq[1], dq[-2], dq[-1]

    stats.isleft_evals += evals
    stats.deque_ops += placed + removed
    cycle = list(dq)
    cycle.pop()  # both ends hold the seam vertex
    return HullPolygon(_canonical(cycle))


def hull_oracle(points: Iterable[Point]) -> HullPolygon:
    """Reference hull by sort and monotone chain.

    Deliberately shares no code with the rank path: it sorts with the
    builtin comparison sort and uses its own inline cross products. Output
    follows the same canonical form as :func:`melkman`.
    """
    pts = sorted(set(points))
    if len(pts) < 3:
        return _degenerate(pts)
    lower: list[Point] = []
    for px, py in pts:
        while len(lower) >= 2:
            ax, ay = lower[-2]
            bx, by = lower[-1]
            if (bx - ax) * (py - ay) - (by - ay) * (px - ax) > 0:
                break
            lower.pop()
        lower.append(Point(px, py))
    upper: list[Point] = []
    for px, py in reversed(pts):
        while len(upper) >= 2:
            ax, ay = upper[-2]
            bx, by = upper[-1]
            if (bx - ax) * (py - ay) - (by - ay) * (px - ax) > 0:
                break
            upper.pop()
        upper.append(Point(px, py))
    cycle = lower[:-1] + upper[:-1]
    if len(cycle) == 2:
        return HullPolygon(tuple(cycle), degenerate=True)
    return HullPolygon(_canonical(cycle))


def _half_turn(v: tuple[int, int]) -> int:
    # 0 for direction angles in [0, pi), 1 for [pi, 2*pi)
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_precedes(u: tuple[int, int], w: tuple[int, int]) -> bool:
    hu, hw = _half_turn(u), _half_turn(w)
    if hu != hw:
        return hu < hw
    return u[0] * w[1] - u[1] * w[0] > 0


def is_convex(poly: HullPolygon) -> bool:
    """True iff the cycle is a strictly convex simple polygon.

    Requires every consecutive triple to turn strictly left and the edge
    directions to complete exactly one full revolution, which rules out
    self-winding star polygons that turn left at every vertex. Exact
    integer test throughout. Polygons with fewer than three vertices are
    not convex polygons and return False.
    """
    vs = poly.vertices
    h = len(vs)
    if h < 3:
        return False
    edges = []
    for i in range(h):
        ax, ay = vs[i]
        bx, by = vs[(i + 1) % h]
        if (ax, ay) == (bx, by):
            return False
        edges.append((bx - ax, by - ay))
    wraps = 0
    for i in range(h):
        e = edges[i]
        f = edges[(i + 1) % h]
        if e[0] * f[1] - e[1] * f[0] <= 0:
            return False
        if _angle_precedes(f, e):
            wraps += 1
    return wraps == 1


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    if (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def contains_all(poly: HullPolygon, points: Iterable[Point]) -> bool:
    """True iff every point lies inside the polygon or on its boundary."""
    vs = poly.vertices
    h = len(vs)
    pts = list(points)
    if h == 0:
        return not pts
    if h == 1:
        return all(tuple(p) == tuple(vs[0]) for p in pts)
    if h == 2:
        return all(_on_segment(vs[0], vs[1], p) for p in pts)
    for p in pts:
        for i in range(h):
            if orientation(vs[i], vs[(i + 1) % h], p) < 0:
                return False
    return True
