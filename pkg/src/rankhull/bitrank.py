"""Blocked occupancy bit table and the shuffles that compact it.

The table marks each occupied rank with one bit, stored as r = ceil(m/p)
words of p bits, and keeps a rank-indexed side table mapping occupied
ranks back to input indices. Compacting the side table into the first n
slots in ascending-rank order ("shuffling") can then either scan all m
ranks, or walk the words: a zero word is skipped in a single compare and
a nonzero word yields its bit positions in popcount(word) steps via the
lowest-set-bit clearing trick.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoxTooLargeError
from .geometry import Point
from .ranking import RankFunction

DEFAULT_MAX_M = 1 << 30


@dataclass
class RankTable:
    """Occupancy bits plus the rank -> input index side table.

    `bloom[w]` holds bits for ranks w*p+1 .. (w+1)*p, lowest bit first;
    rank k occupies bit (k-1) % p of word (k-1) // p. `indirect[k-1]` is
    the input index stored for rank k, or None where the bit is clear.
    """

    bloom: list[int]
    indirect: list[int | None]
    n: int
    m: int
    p: int
    r: int
    duplicates_skipped: int = 0


@dataclass
class ShuffleResult:
    """Compacted ascending-rank order plus loop instrumentation."""

    order: list[int]
    iterations: int
    zero_buckets_skipped: int = 0


def count_trailing_zeros(word: int) -> int:
    """Index of the least significant set bit of a positive integer.

    The portable equivalent of the hardware ctz instruction: word & -word
    isolates the lowest set bit and bit_length names its position.
    """
    if word <= 0:
        raise ValueError("count_trailing_zeros requires a positive word")
    return (word & -word).bit_length() - 1


def extract_set_bits(word: int) -> list[int]:
    """Ascending positions of the set bits of a non-negative word.

    Repeatedly clears the lowest set bit with word & (word - 1); each pass
    records the cleared position, so the loop runs exactly popcount(word)
    times and the result length equals the iteration count.
    """
    if word < 0:
        raise ValueError("extract_set_bits requires a non-negative word")
    positions = []
    x = word
    while x:
        positions.append((x & -x).bit_length() - 1)
        x &= x - 1
    return positions


def build_rank_table(
    points: list[Point],
    rf: RankFunction,
    p: int,
    max_m: int = DEFAULT_MAX_M,
) -> RankTable:
    """Rank every normalized point and record it in a fresh table.

    Duplicate points hit an already-set bit and are skipped and counted;
    the first occurrence keeps its slot in the side table.
    """
    if p < 1:
        raise ValueError("block width must be positive")
    m = rf.m
    if m > max_m:
        raise BoxTooLargeError(f"rank range {m} exceeds cap {max_m}")
    r = -(-m // p)
    bloom = [0] * r
    indirect: list[int | None] = [None] * m
    rank = rf.rank
    n = 0
    duplicates = 0
    for idx, v in enumerate(points):
        k0 = rank(v) - 1
        w, b = divmod(k0, p)
        mask = 1 << b
        if bloom[w] & mask:
            duplicates += 1
            continue
        bloom[w] |= mask
        indirect[k0] = idx
        n += 1
    return RankTable(bloom, indirect, n, m, p, r, duplicates)


def shuffle_naive(table: RankTable) -> ShuffleResult:
    """Scan ranks 1..m and collect occupied entries, stopping after n hits."""
    order: list[int] = []
    append = order.append
    bloom = table.bloom
    indirect = table.indirect
    p = table.p
    n = table.n
    iterations = 0
    for k0 in range(table.m):
        iterations += 1
        if bloom[k0 // p] >> (k0 % p) & 1:
            append(indirect[k0])
            if len(order) == n:
                break
    return ShuffleResult(order, iterations)


def fast_shuffle(table: RankTable) -> ShuffleResult:
    """Walk the p-bit words instead of individual ranks.

    Each word costs one zero test; a nonzero word adds one step per set
    bit, so iterations always total r + n. Rank k lives at bit (k-1) % p
    of word (k-1) // p, hence the side-table slot for word j, bit s is
    j*p + s (rank j*p + s + 1).
    """
    order: list[int] = []
    append = order.append
    indirect = table.indirect
    p = table.p
    iterations = 0
    zero_buckets = 0
    for j, num in enumerate(table.bloom):
        iterations += 1
        if num == 0:
            zero_buckets += 1
            continue
        base = j * p
        for s in extract_set_bits(num):
            iterations += 1
            append(indirect[base + s])
    return ShuffleResult(order, iterations, zero_buckets)
