"""Additive endpoints (the range of f) and their exact densities rho_m.

An integer m is an additive endpoint exactly when m = sigma(d) for some
practical d; since sigma(d) >= d, scanning practical d <= X finds every
endpoint up to X. The exact density of {n : f(n) = m} is

    rho_m = (prod over primes p <= m+1 of (1 - 1/p)) * (sum of 1/d over
            practical d with sigma(d) = m)

because f(n) = m splits n uniquely as d * q with d the practical
component, sigma(d) = m, and the cofactor q free of primes <= m+1. The
empirical estimators below exist to validate that formula, not the other
way round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from pracnum.arith import SpfTable, primes_up_to, shared_spf_table
from pracnum.errors import DomainError
from pracnum.sieve import DEFAULT_SEGMENT_SIZE, X_CAP, _practical_mask, scan_segments

RHO_M_CAP = 10**5  # the prime product's rational size grows with m
PARTIAL_SUM_CAP = 10**4


@dataclass(frozen=True)
class EndpointTable:
    """Sorted additive endpoints <= limit with least practical witnesses."""

    limit: int
    endpoints: tuple[int, ...]
    witness: dict[int, int]  # endpoint m -> least practical d with sigma(d) = m


@dataclass(frozen=True)
class DensityRecord:
    """Exact density of {n : f(n) = m} plus an optional empirical estimate."""

    m: int
    rho_exact: Fraction
    rho_float: float
    empirical: float | None = None
    sample_limit: int | None = None


def _practical_sigma_pairs(limit, table, threads, segment_size):
    """Yield (d array, sigma(d) array) for practical d <= limit, ascending."""
    for a, f, _ in scan_segments(1, limit + 1, table, threads, segment_size):
        mask = _practical_mask(a, f)
        d = np.flatnonzero(mask) + a
        yield d, f[mask]  # f(d) = sigma(d) on practical d


def endpoints_up_to(
    limit: int,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> EndpointTable:
    """Every additive endpoint m <= limit, with its least practical witness."""
    if not 1 <= limit <= X_CAP:
        raise DomainError(f"limit must be in [1, {X_CAP}], got {limit}")
    witness: dict[int, int] = {}
    for d_arr, sig_arr in _practical_sigma_pairs(limit, table, threads, segment_size):
        keep = sig_arr <= np.uint64(limit)
        for d, m in zip(d_arr[keep].tolist(), sig_arr[keep].tolist()):
            if m not in witness:  # ascending d: first hit is the least witness
                witness[m] = d
    return EndpointTable(limit=limit, endpoints=tuple(sorted(witness)), witness=witness)


def is_endpoint(
    m: int,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> bool:
    """True iff some practical d has sigma(d) = m (d <= m suffices)."""
    if not 1 <= m <= X_CAP:
        raise DomainError(f"m must be in [1, {X_CAP}], got {m}")
    return len(_endpoint_witnesses(m, table, threads, segment_size)) > 0


def _endpoint_witnesses(m, table=None, threads=1, segment_size=DEFAULT_SEGMENT_SIZE):
    """All practical d with sigma(d) = m, ascending."""
    out: list[int] = []
    for d_arr, sig_arr in _practical_sigma_pairs(m, table, threads, segment_size):
        hit = sig_arr == np.uint64(m)
        out.extend(d_arr[hit].tolist())
    return out


def _mertens_product(limit: int, table: SpfTable | None = None) -> Fraction:
    """prod over primes p <= limit of (1 - 1/p), exact.

    Multiplied out as two integer products and reduced once at the end;
    per-step Fraction normalization is what makes the naive loop slow.
    """
    num = 1
    den = 1
    for p in primes_up_to(limit, table).tolist():
        num *= p - 1
        den *= p
    return Fraction(num, den)


def rho_exact(
    m: int,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> Fraction:
    """Exact asymptotic density of {n : f(n) = m}; zero iff m is no endpoint."""
    if not 1 <= m <= RHO_M_CAP:
        raise DomainError(f"m must be in [1, {RHO_M_CAP}], got {m}")
    if table is None or table.limit < m + 1:
        table = shared_spf_table(m + 1)
    witnesses = _endpoint_witnesses(m, table, threads, segment_size)
    if not witnesses:
        return Fraction(0)
    reciprocal_sum = sum(Fraction(1, d) for d in witnesses)
    return _mertens_product(m + 1, table) * reciprocal_sum


def rho_empirical(
    m: int,
    sample_limit: int,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> float:
    """#{n <= sample_limit : f(n) = m} / sample_limit, exact count."""
    if not 1 <= sample_limit <= X_CAP:
        raise DomainError(f"sample_limit must be in [1, {X_CAP}], got {sample_limit}")
    count = 0
    target = np.uint64(m)
    for _, f, _ in scan_segments(1, sample_limit + 1, table, threads, segment_size):
        count += int(np.count_nonzero(f == target))
    return count / sample_limit


def density_record(
    m: int,
    sample_limit: int | None = None,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> DensityRecord:
    """rho_m as a record, optionally with an empirical estimate attached."""
    exact = rho_exact(m, table, threads, segment_size)
    empirical = None
    if sample_limit is not None:
        empirical = rho_empirical(m, sample_limit, table, threads, segment_size)
    return DensityRecord(m=m, rho_exact=exact, rho_float=float(exact),
                         empirical=empirical, sample_limit=sample_limit)


def count_f_at_most(
    bound: int,
    sample_limit: int,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> int:
    """#{n <= sample_limit : f(n) <= bound}; companion to rho_partial_sum."""
    if not 1 <= sample_limit <= X_CAP:
        raise DomainError(f"sample_limit must be in [1, {X_CAP}], got {sample_limit}")
    count = 0
    cutoff = np.uint64(bound)
    for _, f, _ in scan_segments(1, sample_limit + 1, table, threads, segment_size):
        count += int(np.count_nonzero(f <= cutoff))
    return count


def rho_partial_sum(
    m_max: int,
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> Fraction:
    """Sum of rho_m for m <= m_max; strictly below 1 for every finite m_max.

    One pass: group 1/d by sigma(d) over practical d <= m_max, then walk m
    upward maintaining the prime product incrementally (it gains a factor
    exactly when m+1 is prime).
    """
    if not 1 <= m_max <= PARTIAL_SUM_CAP:
        raise DomainError(f"m_max must be in [1, {PARTIAL_SUM_CAP}], got {m_max}")
    if table is None or table.limit < m_max + 1:
        table = shared_spf_table(m_max + 1)
    recip: dict[int, Fraction] = {}
    for d_arr, sig_arr in _practical_sigma_pairs(m_max, table, threads, segment_size):
        keep = sig_arr <= np.uint64(m_max)
        for d, m in zip(d_arr[keep].tolist(), sig_arr[keep].tolist()):
            recip[m] = recip.get(m, Fraction(0)) + Fraction(1, d)
    spf = table.spf
    mert_num = 1
    mert_den = 1
    total = Fraction(0)
    for m in range(1, m_max + 1):
        if int(spf[m + 1]) == m + 1:  # m+1 prime
            mert_num *= m
            mert_den *= m + 1
        if m in recip:
            total += Fraction(mert_num, mert_den) * recip[m]
    return total


def endpoint_count_table(
    xs: list[int],
    table: SpfTable | None = None,
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> list[tuple[int, int, float]]:
    """(x, endpoint count <= x, count * log(x)^2 / x) for trend inspection.

    The normalization is a sample choice only; the underlying decay
    statement is asymptotic and not verifiable at desk scale.
    """
    if not xs:
        return []
    for x in xs:
        if not 1 <= x <= X_CAP:
            raise DomainError(f"every x must be in [1, {X_CAP}], got {x}")
    top = endpoints_up_to(max(xs), table, threads, segment_size)
    sorted_eps = np.asarray(top.endpoints, dtype=np.int64)
    out = []
    for x in xs:
        count = int(np.searchsorted(sorted_eps, x, side="right"))
        out.append((x, count, count * math.log(x) ** 2 / x))
    return out
