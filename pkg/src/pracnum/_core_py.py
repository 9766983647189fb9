"""Pure-Python kernel: smallest-prime-factor sieve and the f/sigma range scan.

This is the fallback used when the compiled extension (pracnum._core) is
unavailable. Both kernels implement the same two entry points and must
produce bit-identical arrays; tests/test_kernel_backends.py enforces that.
"""

from math import isqrt

import numpy as np

BACKEND = "python"


def build_spf(limit):
    """Smallest-prime-factor table for 0..limit as uint32.

    spf[k] is the least prime dividing k for k >= 2; spf[0] = spf[1] = 0.
    """
    spf = np.zeros(limit + 1, dtype=np.uint32)
    for i in range(2, isqrt(limit) + 1):
        if spf[i] == 0:
            block = spf[i * i :: i]
            block[block == 0] = i
    # untouched entries >= 2 are prime
    rest = np.flatnonzero(spf[2:] == 0) + 2
    spf[rest] = rest
    return spf


def scan_f_sigma(lo, hi, spf):
    """Per-integer f(n) and sigma(n) for n in [lo, hi).

    f(n) is the sum of divisors of the practical component of n: walk the
    prime factorization in ascending order (the SPF chain yields primes
    ascending), multiplying the running component sigma while each prime p
    satisfies p <= (running sigma) + 1, and freezing it at the first
    failure. Requires hi - 1 <= len(spf) - 1.
    """
    f_arr = np.empty(hi - lo, dtype=np.uint64)
    s_arr = np.empty(hi - lo, dtype=np.uint64)
    for n in range(lo, hi):
        if n == 1:
            f_arr[n - lo] = 1
            s_arr[n - lo] = 1
            continue
        m = n
        sig = 1
        comp_sig = 1
        alive = True
        while m > 1:
            p = int(spf[m])
            ppow = 1
            q = 1
            while m % p == 0:
                m //= p
                ppow *= p
                q += ppow
            sig *= q
            if alive:
                if p <= comp_sig + 1:
                    comp_sig *= q
                else:
                    alive = False
        f_arr[n - lo] = comp_sig
        s_arr[n - lo] = sig
    return f_arr, s_arr
