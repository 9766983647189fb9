# cython: boundscheck=False, wraparound=False, cdivision=True, nonecheck=False
"""Compiled kernel: smallest-prime-factor sieve and the f/sigma range scan.

Mirrors pracnum._core_py exactly; the inner loops run without the GIL so
segment scans parallelize across Python threads.
"""

import numpy as np

from libc.stdint cimport int64_t, uint32_t, uint64_t

BACKEND = "compiled"


def build_spf(long long limit):
    """Smallest-prime-factor table for 0..limit as uint32 (0 for 0 and 1)."""
    spf_arr = np.zeros(limit + 1, dtype=np.uint32)
    cdef uint32_t[::1] spf = spf_arr
    cdef int64_t lim = limit
    cdef int64_t i, j
    with nogil:
        for i in range(2, lim + 1):
            if spf[i] == 0:
                spf[i] = <uint32_t> i
                if i <= lim // i:
                    j = i * i
                    while j <= lim:
                        if spf[j] == 0:
                            spf[j] = <uint32_t> i
                        j += i
    return spf_arr


def scan_f_sigma(long long lo, long long hi, spf_arr):
    """Per-integer f(n) and sigma(n) for n in [lo, hi); needs hi-1 in the table."""
    f_out = np.empty(hi - lo, dtype=np.uint64)
    s_out = np.empty(hi - lo, dtype=np.uint64)
    cdef const uint32_t[::1] spf = spf_arr
    cdef uint64_t[::1] fv = f_out
    cdef uint64_t[::1] sv = s_out
    cdef int64_t a = lo, b = hi
    cdef int64_t n, m, p
    cdef uint64_t sig, comp_sig, ppow, q
    cdef bint alive
    with nogil:
        for n in range(a, b):
            if n == 1:
                fv[n - a] = 1
                sv[n - a] = 1
                continue
            m = n
            sig = 1
            comp_sig = 1
            alive = True
            while m > 1:
                p = <int64_t> spf[m]
                ppow = 1
                q = 1
                while m % p == 0:
                    m = m // p
                    ppow = ppow * <uint64_t> p
                    q = q + ppow
                sig = sig * q
                if alive:
                    if <uint64_t> p <= comp_sig + 1:
                        comp_sig = comp_sig * q
                    else:
                        alive = False
            fv[n - a] = comp_sig
            sv[n - a] = sig
    return f_out, s_out
