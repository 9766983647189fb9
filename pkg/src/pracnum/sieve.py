"""Segmented range scans: practicality flags, PR(x), N(x,y), ratio tables.

The scan kernel computes f(n) and sigma(n) for every n in a segment from
the shared smallest-prime-factor table; everything here reduces those
per-segment arrays. Segments tile the range without overlap and results
are reduced in ascending segment order, so counts are identical for any
segment size or worker count. The compiled kernel drops the GIL, so the
thread pool gives real parallelism when the extension is present.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from pracnum import _kernel
from pracnum.arith import PHI_X_CAP, SpfTable, shared_spf_table
from pracnum.errors import DomainError, TheoremViolationError
from pracnum.practical import is_practical

DEFAULT_SEGMENT_SIZE = 1 << 20
X_CAP = PHI_X_CAP  # scans share the spf-table ceiling


@dataclass(frozen=True, eq=False)
class SieveSegment:
    """Half-open range [lo, hi) with one practicality bit per integer."""

    lo: int
    hi: int
    bits: np.ndarray  # packed uint8, big-endian bit order

    def __len__(self) -> int:
        return self.hi - self.lo

    def flag(self, n: int) -> bool:
        """Practicality bit for an integer n inside the range."""
        if not self.lo <= n < self.hi:
            raise DomainError(f"{n} outside segment [{self.lo}, {self.hi})")
        k = n - self.lo
        return bool((self.bits[k >> 3] >> (7 - (k & 7))) & 1)

    def to_array(self) -> np.ndarray:
        """Unpacked boolean flags, index k for integer lo + k."""
        return np.unpackbits(self.bits, count=len(self)).astype(bool)

    def count(self) -> int:
        return int(self.to_array().sum())

    def numbers(self) -> np.ndarray:
        """The practical integers in the segment, ascending."""
        return np.flatnonzero(self.to_array()) + self.lo


@dataclass(frozen=True)
class CountPoint:
    """One (x, y) evaluation of N(x,y) with its normalized ratio count*log(y)/x."""

    x: int
    y: int
    count: int
    normalized: float


def _segment_bounds(lo, hi, segment_size):
    return [(a, min(a + segment_size, hi)) for a in range(lo, hi, segment_size)]


def scan_segments(
    lo: int,
    hi: int,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
    """Yield (segment_lo, f values, sigma values) tiling [lo, hi) in order.

    The yielded order is ascending regardless of worker scheduling, which
    is what makes every reduction downstream deterministic.
    """
    if hi <= lo:
        return
    if lo < 1:
        raise DomainError(f"scan range must start at 1 or above, got {lo}")
    if table is None:
        table = shared_spf_table(hi - 1)
    if hi - 1 > table.limit:
        raise DomainError(f"range end {hi} exceeds table limit {table.limit}")
    if segment_size < 1:
        raise DomainError(f"segment size must be positive, got {segment_size}")
    bounds = _segment_bounds(lo, hi, segment_size)
    if threads <= 1 or len(bounds) == 1:
        for a, b in bounds:
            f, s = _kernel.scan_f_sigma(a, b, table.spf)
            yield a, f, s
    else:
        # submit a bounded window ahead of the consumer, yield in range order
        spf = table.spf
        pending = deque()
        todo = iter(bounds)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for a, b in itertools.islice(todo, 2 * threads):
                pending.append((a, pool.submit(_kernel.scan_f_sigma, a, b, spf)))
            while pending:
                a, future = pending.popleft()
                f, s = future.result()
                for nxt_a, nxt_b in itertools.islice(todo, 1):
                    pending.append(
                        (nxt_a, pool.submit(_kernel.scan_f_sigma, nxt_a, nxt_b, spf))
                    )
                yield a, f, s


def _practical_mask(seg_lo: int, f: np.ndarray) -> np.ndarray:
    # practical <=> f(n) >= n - 1 (non-practical n have f <= n - 2)
    n = np.arange(seg_lo, seg_lo + len(f), dtype=np.uint64)
    return f >= n - 1


def practical_flags(
    lo: int,
    hi: int,
    table: SpfTable,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> SieveSegment:
    """Practicality bit vector for [lo, hi), one bit per integer."""
    if not 1 <= lo < hi <= table.limit + 1:
        raise DomainError(f"need 1 <= lo < hi <= {table.limit + 1}, got [{lo}, {hi})")
    parts = [
        _practical_mask(a, f)
        for a, f, _ in scan_segments(lo, hi, table, threads, segment_size)
    ]
    flags = parts[0] if len(parts) == 1 else np.concatenate(parts)
    return SieveSegment(lo=lo, hi=hi, bits=np.packbits(flags))


def _check_x(x: int):
    if not 1 <= x <= X_CAP:
        raise DomainError(f"x must be in [1, {X_CAP}], got {x}")


def pr_count(
    x: int,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> int:
    """PR(x): exact number of practical n <= x."""
    _check_x(x)
    total = 0
    for a, f, _ in scan_segments(1, x + 1, table, threads, segment_size):
        total += int(np.count_nonzero(_practical_mask(a, f)))
    return total


def n_count(
    x: int,
    y: int,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> int:
    """N(x,y): exact count of n <= x with f(n) >= y."""
    return n_count_many(x, [y], table, threads, segment_size)[0]


def n_count_many(
    x: int,
    ys: list[int],
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> list[int]:
    """N(x,y) for several y thresholds in a single pass over [1, x]."""
    _check_x(x)
    for y in ys:
        if y < 1:
            raise DomainError(f"y must be positive, got {y}")
    totals = [0] * len(ys)
    thresholds = [np.uint64(y) for y in ys]
    for _, f, _ in scan_segments(1, x + 1, table, threads, segment_size):
        for i, y in enumerate(thresholds):
            totals[i] += int(np.count_nonzero(f >= y))
    return totals


def margenstern_ratio(
    x: int,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> float:
    """PR(x) * log(x) / x, the normalized practical-number count."""
    if x < 3:
        raise DomainError(f"x must be at least 3, got {x}")
    return pr_count(x, table, threads, segment_size) * math.log(x) / x


def ratio_grid(
    xs: list[int],
    ys: list[int],
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> tuple[list[CountPoint], list[tuple[int, int]]]:
    """CountPoint for each (x, y) in the grid xs * ys with 4 <= y <= x.

    Pairs outside that range are rejected individually and returned in the
    second list so callers can report them; one scan per x covers all its
    y thresholds.
    """
    points: list[CountPoint] = []
    rejected: list[tuple[int, int]] = []
    for x in xs:
        _check_x(x)
        valid = [y for y in ys if 4 <= y <= x]
        rejected.extend((x, y) for y in ys if not 4 <= y <= x)
        if not valid:
            continue
        counts = n_count_many(x, valid, table, threads, segment_size)
        by_y = dict(zip(valid, counts))
        for y in ys:
            if y in by_y:
                points.append(
                    CountPoint(x=x, y=y, count=by_y[y], normalized=by_y[y] * math.log(y) / x)
                )
    return points, rejected


def practical_in_window(x: int, table: SpfTable | None = None) -> int:
    """Least practical n in the open window (x, x + 2*sqrt(x)).

    The membership test (n - x)^2 < 4x is exact integer arithmetic. A
    window with no practical number would contradict a proved statement,
    so absence raises TheoremViolationError rather than returning.
    """
    if x < 1:
        raise DomainError(f"x must be positive, got {x}")
    n = x + 1
    while (n - x) * (n - x) < 4 * x:
        if is_practical(n, table):
            return n
        n += 1
    raise TheoremViolationError(
        f"no practical number in ({x}, {x} + 2*sqrt({x})); this is a bug"
    )
