"""End-to-end rank-ordered hull: box, translate, rank, shuffle, scan.

The pipeline stays linear while the point set is dense relative to its
bounding box; the density thresholds quantify where that regime ends for
a given block width. Pathologically sparse inputs (box area beyond the
configured cap) are routed to the sort-based oracle instead of failing,
unless the caller disables the fallback.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bitrank import DEFAULT_MAX_M, build_rank_table, fast_shuffle, shuffle_naive
from .errors import BoxTooLargeError, InvalidCountsError
from .geometry import Point, bounding_box, denormalize, normalize
from .hull import HullPolygon, MelkmanStats, hull_oracle, melkman
from .ranking import RankFunction, RankVariant

_BLOCK_WIDTHS = (8, 16, 32, 64)
_SHUFFLES = ("naive", "fast")


@dataclass(frozen=True)
class PipelineConfig:
    p: int = 64
    rank_variant: RankVariant = RankVariant.COLUMN_MAJOR
    max_m: int = DEFAULT_MAX_M
    fallback_on_low_density: bool = True
    shuffle_variant: str = "fast"

    def __post_init__(self) -> None:
        if self.p not in _BLOCK_WIDTHS:
            raise ValueError(f"block width must be one of {_BLOCK_WIDTHS}")
        if self.max_m < 1:
            raise ValueError("max_m must be at least 1")
        if self.shuffle_variant not in _SHUFFLES:
            raise ValueError(f"shuffle variant must be one of {_SHUFFLES}")


@dataclass(frozen=True)
class OperationCounters:
    isleft_evals: int
    shuffle_iterations: int
    deque_ops: int


@dataclass(frozen=True)
class PipelineReport:
    """Hull in the caller's coordinates plus instrumentation.

    `n` counts distinct points; exact duplicates are absorbed during table
    construction and tallied in `duplicates_skipped`. `step_ns` holds the
    elapsed monotonic nanoseconds of the five steps (box, translate, rank,
    shuffle, scan). When `used_fallback` is set the hull came from the
    sort-based oracle and steps 3-5 and the counters are zero.
    """

    hull: HullPolygon
    n: int
    m: int
    m1: int
    m2: int
    density: float
    duplicates_skipped: int
    counters: OperationCounters
    step_ns: tuple[int, int, int, int, int]
    p: int
    rank_variant: RankVariant
    shuffle_variant: str
    used_fallback: bool = False


_ZERO_COUNTERS = OperationCounters(0, 0, 0)


def _empty_report(cfg: PipelineConfig) -> PipelineReport:
    return PipelineReport(
        hull=HullPolygon((), degenerate=True),
        n=0, m=0, m1=0, m2=0, density=0.0, duplicates_skipped=0,
        counters=_ZERO_COUNTERS, step_ns=(0, 0, 0, 0, 0),
        p=cfg.p, rank_variant=cfg.rank_variant,
        shuffle_variant=cfg.shuffle_variant,
    )


def convex_hull_ranked(
    points: Sequence[Point],
    cfg: PipelineConfig | None = None,
) -> PipelineReport:
    """Convex hull via rank ordering instead of a comparison sort.

    Step 1 finds the bounding box, step 2 translates the set onto the
    normalized grid, step 3 marks each point's rank in the blocked bit
    table, step 4 compacts the table into ascending-rank order, and step 5
    runs the single-pass deque scan over the resulting simple chain. The
    hull is translated back to input coordinates before being returned.
    """
    if cfg is None:
        cfg = PipelineConfig()
    if not points:
        return _empty_report(cfg)

    clock = time.perf_counter_ns
    t0 = clock()
    box = bounding_box(points)
    t1 = clock()
    normalized = normalize(points, box)
    t2 = clock()
    rf = RankFunction(cfg.rank_variant, box.m1, box.m2)
    try:
        table = build_rank_table(normalized, rf, cfg.p, max_m=cfg.max_m)
    except BoxTooLargeError:
        if not cfg.fallback_on_low_density:
            raise
        distinct = len(set(points))
        return PipelineReport(
            hull=hull_oracle(points),
            n=distinct, m=box.m, m1=box.m1, m2=box.m2,
            density=distinct / box.m,
            duplicates_skipped=len(points) - distinct,
            counters=_ZERO_COUNTERS,
            step_ns=(t1 - t0, t2 - t1, 0, 0, 0),
            p=cfg.p, rank_variant=cfg.rank_variant,
            shuffle_variant=cfg.shuffle_variant,
            used_fallback=True,
        )
    t3 = clock()
    if cfg.shuffle_variant == "fast":
        shuffled = fast_shuffle(table)
    else:
        shuffled = shuffle_naive(table)
    t4 = clock()
    chain = [normalized[i] for i in shuffled.order]
    stats = MelkmanStats()
    hull_norm = melkman(chain, stats)
    t5 = clock()

    hull = HullPolygon(
        tuple(denormalize(hull_norm.vertices, box)), hull_norm.degenerate
    )
    return PipelineReport(
        hull=hull,
        n=table.n, m=table.m, m1=box.m1, m2=box.m2,
        density=table.n / table.m,
        duplicates_skipped=table.duplicates_skipped,
        counters=OperationCounters(
            stats.isleft_evals, shuffled.iterations, stats.deque_ops
        ),
        step_ns=(t1 - t0, t2 - t1, t3 - t2, t4 - t3, t5 - t4),
        p=cfg.p, rank_variant=cfg.rank_variant,
        shuffle_variant=cfg.shuffle_variant,
    )


def density(n: int, m: int) -> Fraction:
    """Exact occupancy ratio n/m of a box holding n distinct points."""
    if not 1 <= n <= m:
        raise InvalidCountsError(f"need 1 <= n <= m, got n={n}, m={m}")
    return Fraction(n, m)


def density_threshold_simple(p: int) -> Fraction:
    """Density 1/p below which the word walk stops being linear in n."""
    if p < 1:
        raise ValueError("block width must be positive")
    return Fraction(1, p)


def density_threshold_refined(p: int) -> Fraction:
    """Refined lower density bound 1/(2p(2p^2 + 5p + 1) + 1).

    Charges each zero-word test its true cost relative to an orientation
    test on p-bit operands, which pushes the linear regime several orders
    of magnitude below 1/p.
    """
    if p < 1:
        raise ValueError("block width must be positive")
    return Fraction(1, 2 * p * (2 * p * p + 5 * p + 1) + 1)
