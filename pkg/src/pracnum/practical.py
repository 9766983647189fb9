"""Practicality classification and the exact practicality function f(n).

A number n is practical when every integer in [1, n] is a sum of distinct
divisors of n; f(n) is the largest m such that all of 1..m are such sums.
The fast paths here work through the prime factorization (a number is
practical iff each successive prime satisfies p <= sigma(previous part)+1,
and f(n) is sigma of the practical component); the *_brute functions are
independent definitional oracles built on subset-sum reachability.

Conventions, applied everywhere: f(1) = 1 and 1 is practical (the
factorization condition is vacuous for an empty factor list, and the
interval definitions [1, n] / [1, n-1] coincide because n divides itself).
"""

from __future__ import annotations

from dataclasses import dataclass

from pracnum.arith import N_CAP, SpfTable, divisors, factorize, sigma
from pracnum.errors import CapacityError, DomainError

F_BRUTE_N_CAP = 10**7
IS_PRACTICAL_BRUTE_CAP = 10**6
# reachability vector guard: sigma(n)+1 bits must fit under this
DEFAULT_BIT_CAP = 1 << 30


@dataclass(frozen=True)
class PracticalDecomposition:
    """n split as (practical component) * cofactor, with f(n) attached.

    component is the largest initial segment of the ordered prime-power
    factorization that is itself practical; every prime in the cofactor
    exceeds sigma(component) + 1. f_value = sigma(component) = f(n).
    """

    n: int
    component: int
    component_index: int
    cofactor: int
    f_value: int
    is_practical: bool


def decompose(n: int, table: SpfTable | None = None) -> PracticalDecomposition:
    """Practical-component decomposition of n.

    Scans the sorted factor list once, keeping the running partial product
    and its sigma; the first prime exceeding sigma+1 ends the component.
    """
    fact = factorize(n, table)  # raises DomainError outside [1, N_CAP]
    component = 1
    comp_sigma = 1
    index = 0
    for p, e in fact.factors:
        if p > comp_sigma + 1:
            break
        ppow = 1
        q = 1
        for _ in range(e):
            ppow *= p
            q += ppow
        component *= ppow
        comp_sigma *= q
        index += 1
    cofactor = n // component
    return PracticalDecomposition(
        n=n,
        component=component,
        component_index=index,
        cofactor=cofactor,
        f_value=comp_sigma,
        is_practical=(cofactor == 1),
    )


def is_practical(n: int, table: SpfTable | None = None) -> bool:
    """True iff every prime factor step satisfies p <= sigma(so far) + 1."""
    fact = factorize(n, table)
    comp_sigma = 1
    for p, e in fact.factors:
        if p > comp_sigma + 1:
            return False
        ppow = 1
        q = 1
        for _ in range(e):
            ppow *= p
            q += ppow
        comp_sigma *= q
    return True


def f_fast(n: int, table: SpfTable | None = None) -> int:
    """f(n) via the practical component: f(n) = sigma(component)."""
    return decompose(n, table).f_value


def _reachable_sums(divs: list[int]) -> int:
    # bit k of the result <=> k is a sum of distinct entries of divs
    reach = 1
    for d in divs:
        reach |= reach << d
    return reach


def _first_missing(reach: int) -> int:
    # lowest zero bit position of the reachability mask
    return ((reach + 1) & ~reach).bit_length() - 1


def f_brute(n: int, bit_cap: int = DEFAULT_BIT_CAP) -> int:
    """Definitional f(n): subset-sum reachability over the divisor list.

    Sweeps a bit vector of length sigma(n)+1 through the divisors in
    ascending order, then reports the last index of the initial all-ones
    run. Independent of the factorization shortcut by construction.
    """
    if not 1 <= n <= F_BRUTE_N_CAP:
        raise DomainError(f"f_brute supports n in [1, {F_BRUTE_N_CAP}], got {n}")
    fact = factorize(n)
    total = sigma(fact)
    if total + 1 > bit_cap:
        raise CapacityError(
            f"reachability vector for n = {n} needs {total + 1} bits (cap {bit_cap})"
        )
    reach = _reachable_sums(divisors(fact))
    return _first_missing(reach) - 1


def is_practical_brute(n: int, bit_cap: int = DEFAULT_BIT_CAP) -> bool:
    """Definitional practicality check: all of 1..n must be reachable."""
    if not 1 <= n <= IS_PRACTICAL_BRUTE_CAP:
        raise DomainError(
            f"is_practical_brute supports n in [1, {IS_PRACTICAL_BRUTE_CAP}], got {n}"
        )
    return f_brute(n, bit_cap) >= n


def verify_margenstern(n: int, m_cap: int, table: SpfTable | None = None) -> bool:
    """Check the multiplier closure: m*n practical for every m in [1, m_cap].

    Requires n practical and m_cap <= sigma(n)+1; under those hypotheses a
    False return signals an implementation bug, not mathematics.
    """
    if not is_practical(n, table):
        raise DomainError(f"n = {n} is not practical")
    if m_cap < 1:
        raise DomainError(f"m_cap must be positive, got {m_cap}")
    s = sigma(factorize(n, table))
    if m_cap > s + 1:
        raise DomainError(f"m_cap = {m_cap} exceeds sigma(n)+1 = {s + 1}")
    if m_cap * n > N_CAP:
        raise DomainError(f"m_cap * n = {m_cap * n} exceeds the {N_CAP} input cap")
    return all(is_practical(m * n, table) for m in range(1, m_cap + 1))
