"""Benchmark harness and complexity-model checks.

Operation counters are the primary signal here: they are machine
independent and reproduce exactly for a given plan and seed. Wall-clock
medians back them up for trend checks (time vs n at fixed density) but
carry no absolute meaning across machines.
"""

from __future__ import annotations

import csv
import logging
import math
import statistics
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Sequence

from .errors import InsufficientDataError, InvalidDensityError, RankHullError
from .geometry import Point
from .hull import hull_oracle
from .pipeline import PipelineConfig, convex_hull_ranked
from .pointio import generate_dense_set
from .ranking import RankVariant

log = logging.getLogger(__name__)

RANK_VARIANT = "rank_pipeline"
ORACLE_VARIANT = "oracle_sort_hull"

CSV_HEADER = (
    "m1", "m2", "m", "n", "density", "p", "variant", "rep_count", "median_ns",
    "step1_ns", "step2_ns", "step3_ns", "step4_ns", "step5_ns",
    "isleft_evals", "shuffle_iterations", "deque_ops",
)


@dataclass(frozen=True)
class BenchmarkPlan:
    """One sweep: box dimensions, sample sizes, block widths, repetitions.

    Sample sizes come from `densities` (fractions of the box area) and/or
    explicit `counts`; cells run in the order given. Each repetition of a
    cell reuses the same generated point set, and a discarded warm-up run
    precedes the timed repetitions.
    """

    m1: int
    m2: int
    densities: Sequence[float] = ()
    counts: Sequence[int] = ()
    p_values: Sequence[int] = (32,)
    repetitions: int = 3
    seed: int = 0
    variants: Sequence[str] = (RANK_VARIANT,)
    rank_variant: RankVariant = RankVariant.COLUMN_MAJOR
    shuffle_variant: str = "fast"


@dataclass
class BenchmarkRow:
    m1: int
    m2: int
    m: int
    n: int
    density: float
    p: int
    variant: str
    rep_count: int
    median_ns: int
    step_ns: tuple[int, int, int, int, int]
    isleft_evals: int
    shuffle_iterations: int
    deque_ops: int
    residual_ns: float | None = field(default=None, compare=False)


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    r_squared: float


def linear_fit(xs: Sequence[float], ys: Sequence[float]) -> FitResult:
    """Ordinary least squares of ys against xs with the usual R²."""
    if len(xs) != len(ys):
        raise InsufficientDataError("xs and ys differ in length")
    if len(xs) < 4:
        raise InsufficientDataError(f"need at least 4 samples, got {len(xs)}")
    slope, intercept = statistics.linear_regression(xs, ys)
    mean_y = statistics.fmean(ys)
    ss_tot = sum((y - mean_y) ** 2 for y in ys)
    ss_res = sum((y - (intercept + slope * x)) ** 2 for x, y in zip(xs, ys))
    if ss_tot == 0:
        r_squared = 1.0 if ss_res == 0 else 0.0
    else:
        r_squared = 1.0 - ss_res / ss_tot
    return FitResult(slope, intercept, r_squared)


def crossover_ratio(n: int) -> float:
    """Density above which rank ordering beats an n·log2(n) sort in principle."""
    if n < 2:
        raise ValueError("crossover ratio needs n >= 2")
    return 1.0 / math.log2(n)


class _CountingPoint:
    """Sort key that tallies comparator invocations."""

    __slots__ = ("point", "tally")

    def __init__(self, point: Point, tally: list[int]):
        self.point = point
        self.tally = tally

    def __lt__(self, other: "_CountingPoint") -> bool:
        self.tally[0] += 1
        return self.point < other.point


def compare_operation_counts(
    points: Sequence[Point], cfg: PipelineConfig | None = None
) -> dict[str, int]:
    """Counted work of the rank path vs the oracle's sort on the same set.

    rank_ops is the shuffle's iteration count plus one rank evaluation per
    input point; sort_comparisons counts comparator calls while sorting
    the deduplicated set exactly as the oracle would. Reported, not
    judged: the two operations cost different constants.
    """
    report = convex_hull_ranked(points, cfg)
    rank_ops = report.counters.shuffle_iterations + len(points)
    tally = [0]
    sorted([_CountingPoint(p, tally) for p in set(points)])
    return {"rank_ops": rank_ops, "sort_comparisons": tally[0]}


def _cell_seed(seed: int, n: int) -> int:
    return seed * 2_654_435_761 + n


def _validate(plan: BenchmarkPlan) -> None:
    for d in plan.densities:
        if not 0 < d <= 1:
            raise InvalidDensityError(f"plan density {d} outside (0, 1]")
    if plan.repetitions < 3:
        raise ValueError("plan needs at least 3 repetitions")
    for v in plan.variants:
        if v not in (RANK_VARIANT, ORACLE_VARIANT):
            raise ValueError(f"unknown variant {v!r}")


def _time_rank_cell(
    points: list[Point], p: int, plan: BenchmarkPlan
) -> tuple[int, tuple[int, ...], tuple[int, int, int]]:
    cfg = PipelineConfig(
        p=p, rank_variant=plan.rank_variant, shuffle_variant=plan.shuffle_variant
    )
    convex_hull_ranked(points, cfg)  # warm-up, discarded
    totals = []
    reports = []
    for _ in range(plan.repetitions):
        t0 = time.perf_counter_ns()
        report = convex_hull_ranked(points, cfg)
        totals.append(time.perf_counter_ns() - t0)
        reports.append(report)
    steps = tuple(
        int(statistics.median(r.step_ns[i] for r in reports)) for i in range(5)
    )
    counters = reports[-1].counters
    return (
        int(statistics.median(totals)),
        steps,
        (counters.isleft_evals, counters.shuffle_iterations, counters.deque_ops),
    )


def _time_oracle_cell(
    points: list[Point], plan: BenchmarkPlan
) -> tuple[int, tuple[int, ...], tuple[int, int, int]]:
    hull_oracle(points)  # warm-up, discarded
    totals = []
    for _ in range(plan.repetitions):
        t0 = time.perf_counter_ns()
        hull_oracle(points)
        totals.append(time.perf_counter_ns() - t0)
    return int(statistics.median(totals)), (0, 0, 0, 0, 0), (0, 0, 0)


def run_benchmark(plan: BenchmarkPlan) -> list[BenchmarkRow]:
    """Execute the sweep and return one row per (n, p, variant) cell.

    Cells sharing an n value share the generated point set so block-width
    and variant comparisons see identical inputs. A failing cell is logged
    and skipped without aborting the sweep.
    """
    _validate(plan)
    m = plan.m1 * plan.m2
    n_values = [round(d * m) for d in plan.densities] + [int(c) for c in plan.counts]
    rows: list[BenchmarkRow] = []
    for n in n_values:
        try:
            points = generate_dense_set(
                plan.m1, plan.m2, count=n, seed=_cell_seed(plan.seed, n)
            )
        except RankHullError as exc:
            log.warning("skipping n=%d cells: %s", n, exc)
            continue
        for p in plan.p_values:
            for variant in plan.variants:
                try:
                    if variant == RANK_VARIANT:
                        median_ns, steps, counters = _time_rank_cell(points, p, plan)
                    else:
                        median_ns, steps, counters = _time_oracle_cell(points, plan)
                except RankHullError as exc:
                    log.warning("skipping cell n=%d p=%d %s: %s", n, p, variant, exc)
                    continue
                rows.append(BenchmarkRow(
                    m1=plan.m1, m2=plan.m2, m=m, n=n, density=n / m,
                    p=p, variant=variant, rep_count=plan.repetitions,
                    median_ns=median_ns, step_ns=steps,
                    isleft_evals=counters[0], shuffle_iterations=counters[1],
                    deque_ops=counters[2],
                ))
    _fill_residuals(rows)
    return rows


def _fill_residuals(rows: list[BenchmarkRow]) -> None:
    groups: dict[tuple[int, str], list[BenchmarkRow]] = {}
    for row in rows:
        groups.setdefault((row.p, row.variant), []).append(row)
    for group in groups.values():
        if len(group) < 4:
            continue
        fit = linear_fit([r.n for r in group], [r.median_ns for r in group])
        for row in group:
            row.residual_ns = row.median_ns - (fit.intercept + fit.slope * row.n)


def write_csv(rows: Sequence[BenchmarkRow], dest: str | Path | IO[str]) -> None:
    """Write rows under the fixed header, one line per benchmark cell."""
    own = isinstance(dest, (str, Path))
    fh = open(dest, "w", newline="", encoding="utf-8") if own else dest
    try:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for r in rows:
            writer.writerow((
                r.m1, r.m2, r.m, r.n, f"{r.density:.10g}", r.p, r.variant,
                r.rep_count, r.median_ns, *r.step_ns,
                r.isleft_evals, r.shuffle_iterations, r.deque_ops,
            ))
    finally:
        if own:
            fh.close()
