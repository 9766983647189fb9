"""The practicality threshold sqrt(e^gamma * n * log log n) and related checks.

Above this threshold, a large f forces practicality: every n > 3 with
f(n) >= threshold(n) is practical. verify_hs_theorem scans for
counterexamples (a nonempty result means a bug), near_miss_search builds
the extremal non-practical inputs that approach the threshold from below,
and robin_check evaluates the sigma upper bound that powers the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from pracnum.arith import N_CAP, SpfTable, factorize, next_prime, sigma
from pracnum.errors import CapacityError, DomainError
from pracnum.sieve import DEFAULT_SEGMENT_SIZE, X_CAP, _practical_mask, scan_segments

# fixed decimal constants, not computed: reproducible and independent of
# any special-function library
EULER_GAMMA = 0.5772156649015329
EXP_GAMMA = 1.7810724179901980

# sigma(12) = 28 sits within 1e-4 of the Robin bound; a strict float
# comparison would be flaky, so the right side is inflated by this margin
ROBIN_MARGIN = 1e-9

NEAR_MISS_D_CAP = 10**6


@dataclass(frozen=True)
class HsReport:
    """One evaluation of f(n) against the threshold."""

    n: int
    f_value: int
    threshold: float
    ratio: float
    practical: bool


def hs_threshold(n: int) -> float:
    """sqrt(e^gamma * n * log log n); defined for n >= 3 (log log n > 0)."""
    if n < 3:
        raise DomainError(f"threshold needs n >= 3, got {n}")
    return math.sqrt(EXP_GAMMA * n * math.log(math.log(n)))


def verify_hs_theorem(
    limit: int,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> list[HsReport]:
    """Scan 3 < n <= limit for non-practical n with f(n) >= threshold.

    Expected empty; every entry returned is a counterexample to a proved
    statement and therefore an implementation bug.
    """
    if not 1 <= limit <= X_CAP:
        raise DomainError(f"limit must be in [1, {X_CAP}], got {limit}")
    violations: list[HsReport] = []
    if limit <= 3:
        return violations
    for a, f, _ in scan_segments(4, limit + 1, table, threads, segment_size):
        n = np.arange(a, a + len(f), dtype=np.float64)
        thresh = np.sqrt(EXP_GAMMA * n * np.log(np.log(n)))
        suspect = ~_practical_mask(a, f) & (f.astype(np.float64) >= thresh)
        for k in np.flatnonzero(suspect).tolist():
            fv = int(f[k])
            t = float(thresh[k])
            violations.append(
                HsReport(n=a + k, f_value=fv, threshold=t, ratio=fv / t, practical=False)
            )
    return violations


def near_miss_search(
    d_limit: int,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> list[HsReport]:
    """Non-practical n whose f comes closest to the threshold, by construction.

    For each practical d <= d_limit take q = least prime > sigma(d)+1 and
    n = d*q: the practical component of n is exactly d, so f(n) = sigma(d)
    and n is not practical. This is the extremal shape, so scanning all n
    would buy nothing. Reports are sorted by descending ratio. n = 3 (from
    d = 1) is excluded: the threshold statement assumes n > 3.
    """
    if not 1 <= d_limit <= NEAR_MISS_D_CAP:
        raise DomainError(f"d_limit must be in [1, {NEAR_MISS_D_CAP}], got {d_limit}")
    reports = []
    for a, f, _ in scan_segments(1, d_limit + 1, table, threads, segment_size):
        mask = _practical_mask(a, f)
        for d, s in zip((np.flatnonzero(mask) + a).tolist(), f[mask].tolist()):
            q = next_prime(s + 1)
            n = d * q
            if n <= 3:
                continue
            if n > N_CAP:
                raise CapacityError(f"near-miss candidate {d} * {q} exceeds {N_CAP}")
            t = hs_threshold(n)
            reports.append(
                HsReport(n=n, f_value=s, threshold=t, ratio=s / t, practical=False)
            )
    reports.sort(key=lambda r: (-r.ratio, r.n))
    return reports


def robin_check(n: int, table: SpfTable | None = None) -> bool:
    """sigma(n) <= e^gamma * n * log log n + 0.6483 * n / log log n, n >= 3.

    Exact integer sigma against the float bound inflated by ROBIN_MARGIN.
    True for every n >= 3; a False return signals a bug.
    """
    if n < 3:
        raise DomainError(f"robin_check needs n >= 3, got {n}")
    s = sigma(factorize(n, table))
    ll = math.log(math.log(n))
    bound = EXP_GAMMA * n * ll + 0.6483 * n / ll
    return s <= bound * (1.0 + ROBIN_MARGIN)


def robin_violations(
    limit: int,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> list[int]:
    """All n in [3, limit] failing the sigma bound; expected empty."""
    if not 3 <= limit <= X_CAP:
        raise DomainError(f"limit must be in [3, {X_CAP}], got {limit}")
    out: list[int] = []
    for a, _, sig in scan_segments(3, limit + 1, table, threads, segment_size):
        n = np.arange(a, a + len(sig), dtype=np.float64)
        ll = np.log(np.log(n))
        bound = EXP_GAMMA * n * ll + 0.6483 * n / ll
        bad = sig.astype(np.float64) > bound * (1.0 + ROBIN_MARGIN)
        out.extend((np.flatnonzero(bad) + a).tolist())
    return out
