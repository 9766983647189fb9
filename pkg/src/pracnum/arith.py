"""Integer factorization and multiplicative-function primitives.

Everything else in the package sits on top of this module: ordered
prime-power factorizations, sigma (sum of divisors), divisor enumeration,
the smallest-prime-factor table, and the count of integers free of small
prime factors.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np

from pracnum import _kernel
from pracnum.errors import CapacityError, DomainError

# sigma(n) and every intermediate product stay inside unsigned 64-bit
# range for n up to this cap; larger inputs are rejected, not degraded.
N_CAP = 10**15
SPF_LIMIT_CAP = 10**9
DIVISOR_COUNT_CAP = 10**7
PHI_X_CAP = 10**9

_U64_LIMIT = 1 << 64


@dataclass(frozen=True)
class Factorization:
    """Ordered prime-power decomposition: n = p1^e1 * ... * pr^er, p1 < p2 < ...

    The factor list is empty exactly for n = 1.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    def big_omega(self, bound: int | None = None) -> int:
        """Number of prime factors with multiplicity, optionally only p <= bound."""
        if bound is None:
            return sum(e for _, e in self.factors)
        return sum(e for p, e in self.factors if p <= bound)

    def divisor_count(self) -> int:
        count = 1
        for _, e in self.factors:
            count *= e + 1
        return count

    def least_prime_factor(self):
        """Smallest prime factor; infinity for n = 1 by convention."""
        return self.factors[0][0] if self.factors else math.inf


@dataclass(frozen=True, eq=False)
class SpfTable:
    """Immutable smallest-prime-factor table, shareable across workers.

    spf[k] is the least prime dividing k for 2 <= k <= limit; entries 0
    and 1 hold the sentinel 0.
    """

    limit: int
    spf: np.ndarray


_cache_lock = threading.Lock()
_cached_table: SpfTable | None = None


def build_spf_table(limit: int) -> SpfTable:
    """Sieve the smallest prime factor of every integer up to limit."""
    if not 2 <= limit <= SPF_LIMIT_CAP:
        raise CapacityError(f"spf table limit must be in [2, {SPF_LIMIT_CAP}], got {limit}")
    spf = _kernel.build_spf(limit)
    spf.setflags(write=False)
    return SpfTable(limit=limit, spf=spf)


def shared_spf_table(limit: int) -> SpfTable:
    """Process-wide table cache; grows monotonically, never shrinks.

    A table built for a larger limit serves any smaller range, so repeated
    scans at mixed sizes reuse one sieve.
    """
    global _cached_table
    limit = max(limit, 2)
    with _cache_lock:
        if _cached_table is None or _cached_table.limit < limit:
            _cached_table = build_spf_table(limit)
        return _cached_table


def factorize(n: int, table: SpfTable | None = None) -> Factorization:
    """Ordered prime-power factorization of n.

    Uses table lookups when a table covering n is supplied, trial division
    otherwise. Trial division is fine for one-off queries up to the 10^15
    cap (worst case ~sqrt(n) candidate divisors).
    """
    if not 1 <= n <= N_CAP:
        raise DomainError(f"n must be in [1, {N_CAP}], got {n}")
    if n == 1:
        return Factorization(n=1, factors=())
    factors = []
    if table is not None and n <= table.limit:
        spf = table.spf
        m = n
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    else:
        m = n
        for p in _trial_candidates():
            if p * p > m:
                break
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                factors.append((p, e))
        if m > 1:
            factors.append((m, 1))
    return Factorization(n=n, factors=tuple(factors))


def _trial_candidates():
    """2, 3, then the 6k+-1 wheel."""
    yield 2
    yield 3
    k = 5
    while True:
        yield k
        yield k + 2
        k += 6


def sigma(fact: Factorization) -> int:
    """Sum of all positive divisors, via prod (p^(e+1)-1)/(p-1).

    Overflow past unsigned 64-bit range raises instead of degrading; the
    input cap makes that unreachable, but the guard is the contract.
    """
    total = 1
    for p, e in fact.factors:
        total *= (p ** (e + 1) - 1) // (p - 1)
        if total >= _U64_LIMIT:
            raise OverflowError(f"sigma({fact.n}) exceeds 64-bit range")
    return total


def divisors(fact: Factorization) -> list[int]:
    """All divisors of n in ascending order."""
    if fact.divisor_count() > DIVISOR_COUNT_CAP:
        raise CapacityError(f"n = {fact.n} has more than {DIVISOR_COUNT_CAP} divisors")
    divs = [1]
    for p, e in fact.factors:
        ppow = 1
        extended = list(divs)
        for _ in range(e):
            ppow *= p
            extended.extend(d * ppow for d in divs)
        divs = extended
    divs.sort()
    return divs


def phi_count(x: int, y: int, table: SpfTable | None = None) -> int:
    """Count of n <= x with no prime factor <= y; n = 1 always counts.

    Direct scan over the spf table. Desk-scale x keeps this cheap and
    bug-resistant; no Legendre/Meissel recursion.
    """
    if not 1 <= x <= PHI_X_CAP:
        raise DomainError(f"x must be in [1, {PHI_X_CAP}], got {x}")
    if not 1 <= y <= x:
        raise DomainError(f"y must be in [1, x], got y={y}, x={x}")
    if x == 1:
        return 1
    if table is None or table.limit < x:
        table = shared_spf_table(x)
    return int(np.count_nonzero(table.spf[2 : x + 1] > y)) + 1


def primes_up_to(limit: int, table: SpfTable | None = None) -> np.ndarray:
    """All primes <= limit, ascending, as an int64 array."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    if table is None or table.limit < limit:
        table = shared_spf_table(limit)
    idx = np.arange(limit + 1, dtype=np.int64)
    return idx[table.spf[: limit + 1] == idx][1:]  # drop the spf[0] == 0 match


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far past the 10^15 input cap."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Least prime strictly greater than n."""
    if n < 2:
        return 2
    k = n + 1 if n % 2 == 0 else n + 2
    while not is_prime(k):
        k += 2
    return k
